#include "sharpmeans/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sharpmeans {

namespace {

Json optional_number(const std::optional<Real>& v, int digits) {
  return v ? number_json(*v, digits) : Json(nullptr);
}

std::string sign_char(int sign) { return sign > 0 ? "+" : sign < 0 ? "-" : "?"; }

Status status_from_string(const std::string& s) {
  if (s == "holds-on-grid") return Status::Holds;
  if (s == "violated") return Status::Violated;
  throw std::invalid_argument("unknown status '" + s + "'");
}

// "key  value" rows with the keys padded to a common width.
class Table {
public:
  void row(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    std::ostringstream out;
    for (const auto& r : rows_) out << std::left << std::setw(static_cast<int>(width) + 2) << r.first << r.second << '\n';
    return out.str();
  }

private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

} // namespace

Json number_json(const Real& v, int digits) {
  return Json{{"value", v.to_string(digits)}, {"digits", digits}};
}

Real number_from_json(const Json& j, Real::Bits bits) {
  return Real::parse(j.at("value").get<std::string>(), bits);
}

Json to_json(const VerificationReport& report, int digits) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    witnesses.push_back(Json{{"a", number_json(w.a, digits)},
                             {"b", number_json(w.b, digits)},
                             {"relation", w.relation},
                             {"lhs", number_json(w.lhs, digits)},
                             {"rhs", number_json(w.rhs, digits)}});
  }
  return Json{{"claim", report.claim},
              {"grid", report.grid},
              {"bits", report.bits},
              {"status", to_string(report.status)},
              {"witnesses", witnesses},
              {"min_margin", optional_number(report.min_margin, digits)}};
}

VerificationReport verification_report_from_json(const Json& j, Real::Bits bits) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.grid = j.at("grid").get<std::size_t>();
  r.bits = j.at("bits").get<int>();
  r.status = status_from_string(j.at("status").get<std::string>());
  for (const auto& w : j.at("witnesses")) {
    r.witnesses.push_back({number_from_json(w.at("a"), bits), number_from_json(w.at("b"), bits),
                           w.at("relation").get<std::string>(), number_from_json(w.at("lhs"), bits),
                           number_from_json(w.at("rhs"), bits)});
  }
  if (j.contains("min_margin") && !j.at("min_margin").is_null()) {
    r.min_margin = number_from_json(j.at("min_margin"), bits);
  }
  return r;
}

std::string to_text(const VerificationReport& report, int digits) {
  Table t;
  t.row("claim", report.claim);
  t.row("status", to_string(report.status));
  t.row("grid", std::to_string(report.grid));
  t.row("bits", std::to_string(report.bits));
  if (report.min_margin) t.row("min margin", report.min_margin->to_string(6));
  std::string out = t.str();
  for (const auto& w : report.witnesses) {
    out += "witness  (" + w.a.to_string(digits) + ", " + w.b.to_string(digits) + ")  " + w.relation +
           " fails: " + w.lhs.to_string(digits) + " vs " + w.rhs.to_string(digits) + '\n';
  }
  return out;
}

Json to_json(const SharpBoundReport& report, int bits, int digits) {
  return Json{{"mean", report.mean.name()},
              {"bits", bits},
              {"p_upper", number_json(report.p_upper, digits)},
              {"p_lower", number_json(report.p_lower, digits)},
              {"alpha_upper", number_json(report.alpha_upper, digits)},
              {"beta_lower", number_json(report.beta_lower, digits)},
              {"upper_extremizer", optional_number(report.upper_extremizer, digits)},
              {"lower_extremizer", optional_number(report.lower_extremizer, digits)}};
}

std::string to_text(const SharpBoundReport& report, int digits) {
  Table t;
  t.row("mean", report.mean.name());
  t.row("p_upper", report.p_upper.to_string(digits));
  t.row("p_lower", report.p_lower.to_string(digits));
  t.row("alpha_upper", report.alpha_upper.to_string(digits));
  t.row("beta_lower", report.beta_lower.to_string(digits));
  t.row("upper_extremizer", report.upper_extremizer ? report.upper_extremizer->to_string(digits) : "endpoint");
  t.row("lower_extremizer", report.lower_extremizer ? report.lower_extremizer->to_string(digits) : "endpoint");
  return t.str();
}

Json to_json(const SignProfile& profile, int bits, int digits) {
  Json segments = Json::array();
  for (const auto& s : profile.segments) {
    segments.push_back(Json{{"lo", number_json(s.lo, digits)},
                            {"hi", number_json(s.hi, digits)},
                            {"sign", sign_char(s.sign)}});
  }
  Json crossings = Json::array();
  for (const auto& c : profile.crossings) {
    crossings.push_back(Json{{"lo", number_json(c.lo, digits)}, {"hi", number_json(c.hi, digits)}});
  }
  return Json{{"function", profile.function.tag_name()},
              {"p", number_json(profile.function.p, digits)},
              {"bits", bits},
              {"grid", profile.samples.size()},
              {"segments", segments},
              {"crossings", crossings}};
}

std::string to_text(const SignProfile& profile, int digits) {
  std::ostringstream out;
  out << "function  " << profile.function.tag_name() << "  p = " << profile.function.p.to_string(digits)
      << "  grid = " << profile.samples.size() << '\n';
  out << "crossings " << profile.crossings.size() << '\n';
  const int w = digits + 8;
  for (const auto& s : profile.segments) {
    out << "  " << sign_char(s.sign) << "  " << std::left << std::setw(w) << s.lo.to_string(digits)
        << s.hi.to_string(digits) << '\n';
  }
  for (const auto& c : profile.crossings) {
    out << "  root in [" << c.lo.to_string(digits) << ", " << c.hi.to_string(digits) << "]\n";
  }
  return out.str();
}

std::string to_csv(const SignProfile& profile, int digits) {
  std::ostringstream out;
  out << "x,value,scale,sign\n";
  for (const auto& s : profile.samples) {
    out << s.x.to_string(digits) << ',' << s.value.value.to_string(digits) << ','
        << s.value.scale.to_string(digits) << ',' << s.sign << '\n';
  }
  return out.str();
}

} // namespace sharpmeans
