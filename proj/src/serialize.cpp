#include "rootfold/serialize.hpp"

#include <sstream>

#include "rootfold/errors.hpp"

namespace rootfold {

json to_json(const Rational& x) { return x.to_string(); }

json to_json(const RationalVector& v) {
  json a = json::array();
  for (const auto& c : v.coords()) a.push_back(c.to_string());
  return a;
}

json to_json(std::span<const RationalVector> vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("vector must be a JSON array");
  std::vector<Rational> c;
  for (const auto& x : j) {
    c.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<long>()));
  }
  return RationalVector(std::move(c));
}

json system_json(const RootSystem& rs) {
  return {{"label", rs.label().to_string()},
          {"ambient_dim", rs.ambient_dim()},
          {"simple", to_json(rs.simple())},
          {"positive", to_json(rs.positive())},
          {"marks", rs.marks()},
          {"coweights", to_json(rs.coweights())}};
}

json fold_report_json(const FoldedRootSystem& folded) {
  const auto& ctx = folded.context;
  json profiles = json::array();
  for (const auto& p : folded.profiles) {
    profiles.push_back({{"root", to_json(p.root)}, {"P", std::vector<int>(p.values.begin(), p.values.end())}});
  }
  return {{"source_label", ctx.rs().label().to_string()},
          {"j", ctx.j},
          {"order", ctx.order},
          {"sigma", ctx.element.sigma.to_cycles()},
          {"orbits", ctx.orbits},
          {"m", ctx.multiplicities},
          {"folded_label", folded.label.to_string()},
          {"reduced", folded.reduced},
          {"folded_simple", to_json(folded.simple)},
          {"folded_positive_count", folded.positive.size()},
          {"vanish", to_json(folded.vanish)},
          {"profiles", profiles}};
}

namespace {

std::string coeff_text(const std::vector<int>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s;
}

}  // namespace

std::string system_tsv(const RootSystem& rs) {
  std::ostringstream out;
  out << "# " << rs.label().to_string() << "\tambient_dim=" << rs.ambient_dim()
      << "\tpositive=" << rs.positive().size() << "\n";
  out << "height\tcoefficients\troot\n";
  for (std::size_t i = 0; i < rs.positive().size(); ++i) {
    const auto& c = rs.positive_coefficients()[i];
    int h = 0;
    for (int x : c) h += x;
    out << h << "\t" << coeff_text(c) << "\t" << rs.positive()[i].to_string() << "\n";
  }
  return out.str();
}

std::string fold_report_tsv(const FoldedRootSystem& folded) {
  const auto& ctx = folded.context;
  std::ostringstream out;
  out << "# " << ctx.rs().label().to_string() << "\tj=" << ctx.j << "\torder=" << ctx.order
      << "\tfolded=" << folded.label.to_string() << "\n";
  out << "kind\tcoefficients\troot\tP\n";
  for (std::size_t i = 0; i < folded.profiles.size(); ++i) {
    const auto& p = folded.profiles[i];
    std::string ps;
    for (int v : p.values) ps += (ps.empty() ? "" : " ") + std::to_string(v);
    std::string coeffs = i == 0 ? "" : coeff_text(folded.positive_coefficients[i - 1]);
    out << (i == 0 ? "zero" : "folded") << "\t" << coeffs << "\t" << p.root.to_string() << "\t" << ps
        << "\n";
  }
  for (const auto& v : folded.vanish) out << "vanish\t\t" << v.to_string() << "\t\n";
  return out.str();
}

}  // namespace rootfold
