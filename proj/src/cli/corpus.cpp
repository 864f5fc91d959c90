#include "subtan/cli.hpp"
#include "subtan/parse.hpp"

namespace subtan::cli {
namespace {

const Chart& plane() {
  static const Chart c({"x", "y"});
  return c;
}
const Chart& space() {
  static const Chart c({"x", "y", "z"});
  return c;
}
const Chart& phase4() {
  static const Chart c({"x1", "x2", "y1", "y2"});
  return c;
}

Endo endo_rows(const Chart& c, const std::vector<std::vector<const char*>>& rows) {
  Matrix m(c.vars(), c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j) m(i, j) = parse_coeff(rows[i][j], c.vars());
  return Endo(c, m);
}

KForm std_omega(const Chart& c) {
  KForm w(c, 2);
  for (std::size_t i = 0; 2 * i < c.dim(); ++i) w.add({i, i + c.dim() / 2}, c.constant(1));
  return w;
}

Tensors with_omega(const KForm& omega, const Endo& a) {
  return {omega.chart(), invert_two_form(omega), a, std::nullopt, omega};
}

class Builder {
 public:
  explicit Builder(std::vector<CorpusEntry>& out) : out_(out) {}

  void add(const std::string& entry, const Tensors& t, const std::string& check, bool pass) {
    out_.push_back({entry, check, pass, [t, check] { return run_check(t, check); }});
  }
  void add_all(const std::string& entry, const Tensors& t, const std::vector<std::pair<std::string, bool>>& checks) {
    for (const auto& [check, pass] : checks) add(entry, t, check, pass);
  }

 private:
  std::vector<CorpusEntry>& out_;
};

}  // namespace

std::vector<CorpusEntry> bundled_corpus(std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  Builder b(out);

  // named structures
  Tensors e1{plane(), std::nullopt, endo_rows(plane(), {{"0", "0"}, {"1", "0"}}), std::nullopt, std::nullopt};
  KVector e2_pi(plane(), 2);
  e2_pi.add({0, 1}, plane().constant(1));
  Tensors e2{plane(), e2_pi, std::nullopt, std::nullopt, std::nullopt};
  Tensors e5{phase4(), std::nullopt,
             endo_rows(phase4(), {{"0", "0", "0", "0"}, {"0", "0", "0", "0"}, {"1", "y1", "0", "0"}, {"0", "1", "0", "0"}}),
             std::nullopt, std::nullopt};
  KVector e6_pi(space(), 2);
  e6_pi.add({0, 1}, space().coordinate(0));
  e6_pi.add({1, 2}, space().coordinate(1));
  e6_pi.add({2, 0}, space().coordinate(2));
  Tensors e6{space(), e6_pi, std::nullopt, std::nullopt, std::nullopt};

  const std::vector<std::pair<std::string, bool>> all_pass{{"J2", true}, {"S1", true},         {"S2", true},
                                                           {"S3", true}, {"S4", true},         {"INTEGRABLE", true},
                                                           {"EQUIV", true}};
  b.add_all("E1", e1, all_pass);
  b.add("E1", e1, "IM_S2", true);
  b.add_all("E2", e2, all_pass);
  b.add("E2", e2, "S1_CLOSED", true);
  b.add("E2", e2, "LEIBNIZ", true);
  b.add_all("E5", e5,
            {{"J2", true}, {"S1", true}, {"S2", true}, {"S3", false}, {"S4", true}, {"INTEGRABLE", false}, {"EQUIV", true}});
  b.add_all("E6", e6,
            {{"J2", true}, {"S1", false}, {"S3", true}, {"S4", true}, {"INTEGRABLE", false}, {"EQUIV", true}, {"LEIBNIZ", true}});

  // Hitchin pairs and the twist family
  const KForm w2 = std_omega(plane()), w4 = std_omega(phase4());
  const Endo x2_id = Endo::scalar(phase4(), phase4().coordinate(1));
  b.add("hitchin/scalar", with_omega(w2, Endo::scalar(plane(), plane().constant(3))), "HITCHIN", true);
  b.add("hitchin/x2", with_omega(w4, x2_id), "HITCHIN", false);
  b.add("hitchin/shear", with_omega(w2, endo_rows(plane(), {{"0", "0"}, {"1", "0"}})), "HITCHIN", false);
  for (int c : {1, 2, -3}) {
    RatFunc cc = plane().constant(c);
    Tensors t = with_omega(w2, Endo::scalar(plane(), cc));
    t.sigma = -(w2 * (cc * cc));
    std::string name = "twist/c=" + std::to_string(c);
    b.add(name, t, "TWIST", true);
    b.add(name, t, "GROUPOID_TWIST", true);
    b.add(name, t, "GROUPOID_MAP", true);
    b.add(name, t, "J2", true);
    Tensors perturbed = t;
    perturbed.sigma = *t.sigma + w2;
    b.add(name + "/perturbed", perturbed, "TWIST", false);
    Tensors bare = t;
    bare.sigma.reset();
    b.add(name + "/untwisted", bare, "GROUPOID_TWIST", false);
    b.add(name + "/untwisted", bare, "GROUPOID_MAP", false);
  }

  // lemma instances
  Endo tangent = endo_rows(phase4(), {{"0", "0", "0", "0"}, {"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}});
  b.add("symplectic/tangent", with_omega(w4, tangent), "SYMP_SUBTANGENT", true);
  b.add("symplectic/identity", with_omega(w2, Endo::identity(plane())), "SYMP_SUBTANGENT", false);
  b.add("lemma/standard", with_omega(w2, Endo(plane())), "S1_CLOSED", true);
  b.add("lemma/x2", with_omega(w4, x2_id), "S1_CLOSED", true);
  b.add("lemma/x2", with_omega(w4, x2_id), "S2_HITCHIN", true);
  b.add("lemma/x2", with_omega(w4, x2_id), "S2", false);
  b.add("lemma/x2", with_omega(w4, x2_id), "TORSION", true);
  b.add("lemma/x2", with_omega(w4, x2_id), "IM_S2", true);
  b.add("lemma/scalar", with_omega(w2, Endo::scalar(plane(), plane().constant(5))), "S2_HITCHIN", true);

  // IM forms over the symplectic cotangent algebroid
  b.add("im/zero", with_omega(w2, Endo(plane())), "IM", true);
  b.add("im/identity", with_omega(w2, Endo::identity(plane())), "IM", true);
  b.add("im/shear", with_omega(w2, endo_rows(plane(), {{"0", "0"}, {"1", "0"}})), "IM", false);
  b.add("im/shear", with_omega(w2, endo_rows(plane(), {{"0", "0"}, {"1", "0"}})), "S2", false);

  // pair groupoid
  b.add("groupoid/standard", with_omega(w2, Endo(plane())), "MULT", true);
  b.add("groupoid/standard4", with_omega(w4, Endo(phase4())), "MULT", true);
  b.add("groupoid/shear", with_omega(w2, endo_rows(plane(), {{"0", "0"}, {"1", "0"}})), "MULT_ENDO", true);
  out.push_back({"groupoid/sum", "MULT", false, [w2] {
                   PairGroupoid G = build_pair_groupoid(plane());
                   return check_multiplicative_form(G, pullback_form(G.target, w2) + pullback_form(G.source, w2));
                 }});
  b.add("groupoid/scalar", with_omega(w2, Endo::scalar(plane(), plane().constant(3))), "GROUPOID_HITCHIN", true);
  b.add("groupoid/x2", with_omega(w4, x2_id), "GROUPOID_HITCHIN", true);

  // random square-zero structures
  RandomSource rng(seed);
  for (int k = 0; k < 20; ++k) {
    GASStructure s = random_square_zero(rng);
    Tensors t{s.chart, s.pi, s.a, s.sigma, std::nullopt};
    std::string name = std::string("random/") + (k < 10 ? "0" : "") + std::to_string(k);
    b.add(name, t, "J2", true);
    b.add(name, t, "EQUIV", true);
  }
  return out;
}

bool CorpusOutcome::all_matched() const {
  for (const auto& row : rows)
    if (row.report.passed() != row.expect_pass) return false;
  return true;
}

namespace {

bool selected(const CorpusEntry& e, const std::string& filter) {
  if (filter.empty() || e.name == filter || e.check == filter) return true;
  return e.name.size() > filter.size() && e.name.compare(0, filter.size(), filter) == 0 &&
         e.name[filter.size()] == '/';
}

}  // namespace

CorpusOutcome run_corpus(std::uint64_t seed, const std::string& filter, const std::vector<std::string>& flips) {
  std::vector<CorpusEntry> entries = bundled_corpus(seed);
  for (const auto& flip : flips) {
    auto slash = flip.rfind('/');
    bool hit = false;
    if (slash != std::string::npos)
      for (auto& e : entries)
        if (e.name == flip.substr(0, slash) && e.check == flip.substr(slash + 1)) {
          e.expect_pass = !e.expect_pass;
          hit = true;
        }
    if (!hit) throw Error(ErrorKind::InvalidInput, "flip '" + flip + "' matches no corpus entry (use ENTRY/CHECK)");
  }
  CorpusOutcome out;
  for (const auto& e : entries)
    if (selected(e, filter)) out.rows.push_back({e.name, e.expect_pass, e.run()});
  if (out.rows.empty()) out.warnings.push_back("filter '" + filter + "' selects no corpus entries; vacuous pass");
  return out;
}

nlohmann::json corpus_document(std::uint64_t seed, const std::string& filter, const std::vector<std::string>& flips,
                               const CorpusOutcome& outcome) {
  // The digest identifies the run configuration in place of an input file.
  std::string config = "corpus\nseed " + std::to_string(seed) + "\nfilter " + filter + "\n";
  for (const auto& f : flips) config += "flip " + f + "\n";
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& row : outcome.rows) {
    nlohmann::json j = to_json(row.report);
    j["name"] = row.entry + "/" + row.report.condition;
    j["expected"] = row.expect_pass ? "pass" : "fail";
    if (row.report.passed() != row.expect_pass) mismatches.push_back(j["name"]);
    checks.push_back(std::move(j));
  }
  return {{"version", kVersion},
          {"input_sha256", sha256_hex(config)},
          {"checks", checks},
          {"summary",
           {{"total", outcome.rows.size()},
            {"matched", outcome.rows.size() - mismatches.size()},
            {"mismatches", mismatches},
            {"warnings", outcome.warnings},
            {"verdict", mismatches.empty() ? "pass" : "fail"}}}};
}

}  // namespace subtan::cli
