#include <map>

#include <openssl/evp.h>

#include "subtan/cli.hpp"
#include "subtan/lemmas.hpp"

namespace subtan::cli {

GASStructure Tensors::structure() const {
  return {a.value_or(Endo(chart)), pi.value_or(KVector(chart, 2)), sigma.value_or(KForm(chart, 2))};
}

namespace {

using Runner = std::function<ConditionReport(const Tensors&)>;

struct CheckSpec {
  bool needs_omega;
  Runner run;
};

const std::map<std::string, CheckSpec>& registry() {
  static const std::map<std::string, CheckSpec> checks = [] {
    std::map<std::string, CheckSpec> m;
    auto on_structure = [](ConditionReport (*f)(const GASStructure&)) {
      return CheckSpec{false, [f](const Tensors& t) { return f(t.structure()); }};
    };
    m.emplace("J2", on_structure(check_square_zero));
    m.emplace("S1", on_structure(check_S1));
    m.emplace("S2", on_structure(check_S2));
    m.emplace("S3", on_structure(check_S3));
    m.emplace("S4", on_structure(check_S4));
    m.emplace("INTEGRABLE", on_structure(check_integrability_direct));
    m.emplace("EQUIV", on_structure(check_condition_equivalence));
    m.emplace("TWIST", on_structure(twist_of_hitchin_pair));
    m.emplace("IM_S2", on_structure(im_form_iff_S2));
    m.emplace("LEIBNIZ", CheckSpec{false, [](const Tensors& t) {
                                     return check_leibniz(CotangentAlgebroid(t.structure().pi));
                                   }});
    m.emplace("IM", CheckSpec{false, [](const Tensors& t) {
                                GASStructure s = t.structure();
                                return check_im_form(CotangentAlgebroid(s.pi), IMFormCandidate::dual_of(s.a));
                              }});
    m.emplace("S1_CLOSED", CheckSpec{false, [](const Tensors& t) { return lemma_S1_iff_closed(t.structure().pi); }});
    m.emplace("S2_HITCHIN", CheckSpec{false, [](const Tensors& t) {
                                        GASStructure s = t.structure();
                                        return lemma_S2_iff_hitchin(s.pi, s.a);
                                      }});
    m.emplace("HITCHIN", CheckSpec{true, [](const Tensors& t) {
                                     return check_hitchin_pair(*t.omega, t.structure().a);
                                   }});
    m.emplace("SYMP_SUBTANGENT", CheckSpec{true, [](const Tensors& t) {
                                             return check_symplectic_subtangent(*t.omega, t.structure().a);
                                           }});
    m.emplace("TORSION", CheckSpec{true, [](const Tensors& t) {
                                     return check_torsion_identity(*t.omega, t.structure().a);
                                   }});
    m.emplace("MULT", CheckSpec{true, [](const Tensors& t) {
                                  PairGroupoid G = build_pair_groupoid(t.chart);
                                  return check_multiplicative_form(G, groupoid_symplectic_form(G, *t.omega));
                                }});
    m.emplace("MULT_ENDO", CheckSpec{false, [](const Tensors& t) {
                                       PairGroupoid G = build_pair_groupoid(t.chart);
                                       return check_multiplicative_endo(G, lift_endo(G, t.structure().a));
                                     }});
    m.emplace("GROUPOID_TWIST", CheckSpec{true, [](const Tensors& t) {
                                            return groupoid_twist_condition(build_pair_groupoid(t.chart),
                                                                            t.structure(), *t.omega);
                                          }});
    m.emplace("GROUPOID_MAP", CheckSpec{true, [](const Tensors& t) {
                                          return groupoid_subtangent_map(build_pair_groupoid(t.chart), t.structure(),
                                                                         *t.omega);
                                        }});
    m.emplace("GROUPOID_HITCHIN", CheckSpec{true, [](const Tensors& t) {
                                              return hitchin_pair_on_groupoid(build_pair_groupoid(t.chart),
                                                                              t.structure(), *t.omega);
                                            }});
    return m;
  }();
  return checks;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, spec] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::optional<std::string> check_unavailable(const Tensors& t, const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) return "unknown check '" + name + "'";
  if (it->second.needs_omega && !t.omega) return "check " + name + " needs an omega section";
  return std::nullopt;
}

ConditionReport run_check(const Tensors& t, const std::string& name) {
  if (auto why = check_unavailable(t, name)) throw Error(ErrorKind::InvalidInput, *why);
  try {
    return registry().at(name).run(t);
  } catch (const Error& e) {
    ConditionReport r(name);
    r.add_witness("evaluation", e.what());
    r.note("the check could not be evaluated on this input");
    return r;
  }
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Unsupported, "SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

nlohmann::json to_json(const ConditionReport& r) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"generators", w.generators}, {"defect", w.defect}});
  return {{"name", r.condition}, {"verdict", r.verdict()}, {"witnesses", witnesses}, {"notes", r.notes}};
}

nlohmann::json check_document(std::string_view input, const std::vector<ConditionReport>& reports) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t passed = 0;
  for (const auto& r : reports) {
    checks.push_back(to_json(r));
    passed += r.passed() ? 1 : 0;
  }
  return {{"version", kVersion},
          {"input_sha256", sha256_hex(input)},
          {"checks", checks},
          {"summary",
           {{"total", reports.size()},
            {"passed", passed},
            {"failed", reports.size() - passed},
            {"verdict", passed == reports.size() ? "pass" : "fail"}}}};
}

namespace {

void render_report(std::string& out, const ConditionReport& r, const std::string& indent) {
  for (const auto& w : r.witnesses) out += indent + w.generators + " = " + w.defect + "\n";
  for (const auto& n : r.notes) out += indent + "note: " + n + "\n";
}

}  // namespace

std::string render_text(const std::vector<ConditionReport>& reports) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : reports) {
    out += r.condition + ": " + r.verdict() + "\n";
    render_report(out, r, "  ");
    passed += r.passed() ? 1 : 0;
  }
  out += "summary: " + std::to_string(passed) + "/" + std::to_string(reports.size()) + " checks pass\n";
  return out;
}

std::string render_corpus_text(const CorpusOutcome& outcome) {
  std::string out;
  std::size_t matched = 0;
  for (const auto& w : outcome.warnings) out += "warning: " + w + "\n";
  for (const auto& row : outcome.rows) {
    bool ok = row.report.passed() == row.expect_pass;
    matched += ok ? 1 : 0;
    out += row.entry + "/" + row.report.condition + ": " + row.report.verdict() + " (expected " +
           (row.expect_pass ? "pass" : "fail") + ")" + (ok ? "" : "  MISMATCH") + "\n";
    if (!ok) render_report(out, row.report, "  ");
  }
  out += "summary: " + std::to_string(matched) + "/" + std::to_string(outcome.rows.size()) +
         " expectations met\n";
  return out;
}

}  // namespace subtan::cli
