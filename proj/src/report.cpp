#include "mubenc/report.hpp"

#include <charconv>
#include <sstream>

namespace mubenc {

namespace {

Json complex_pair(const Cx& z) { return Json::array({z.real(), z.imag()}); }

std::string to_chars_string(double x, std::chars_format fmt, int precision) {
  char buf[64];
  const auto res = precision < 0 ? std::to_chars(buf, buf + sizeof buf, x, fmt)
                                 : std::to_chars(buf, buf + sizeof buf, x, fmt, precision);
  return std::string(buf, res.ptr);
}

}  // namespace

Json to_json(const QuditState& s) {
  Json out = Json::array();
  for (const Cx& a : s.amplitudes()) out.push_back(complex_pair(a));
  return out;
}

Json to_json(const UnitaryMatrix& u) {
  Json out = Json::array();
  for (int r = 0; r < u.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < u.dim(); ++c) row.push_back(complex_pair(u(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const ShiftTable& table) {
  const int d = table.d();
  Json rows = Json::array();
  for (const auto& id : all_unitary_ids(d)) rows.push_back(id.label());
  Json columns = Json::array();
  for (int b = 1; b <= d + 1; ++b) columns.push_back("basis " + std::to_string(b));
  return {{"d", d}, {"rows", rows}, {"columns", columns}, {"shift", table.rows()}};
}

Json to_json(const ShiftAssignment& asg) { return {{"T", asg.source}, {"targets", asg.targets}}; }

Json to_json(const NoGoReport& report) {
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  return {{"d", report.d}, {"searched", report.searched}, {"consistent", report.consistent},
          {"witnesses", witnesses}};
}

Json to_json(const EntropyReport& report) {
  Json out = {{"d", report.d}, {"m", report.m}, {"analytic_bits", report.analytic_bits}};
  if (report.partition_bits) out["partition_bits"] = *report.partition_bits;
  if (report.empirical_bits) out["empirical_bits"] = *report.empirical_bits;
  if (report.trials) out["trials"] = *report.trials;
  if (report.plugin_bias_bound_bits) out["plugin_bias_bound_bits"] = *report.plugin_bias_bound_bits;
  return out;
}

Json to_json(const EfficiencyRow& row) {
  return {{"d", row.d}, {"capacity_bits", row.capacity_bits}, {"max_info_bits", row.max_info_bits},
          {"ratio", row.ratio}};
}

Json to_json(const Codeword& a) { return a.entries(); }

Json to_json(const RoundTripResult& result) {
  Json failures = Json::array();
  for (const auto& a : result.failures) failures.push_back(to_json(a));
  return {{"attempted", result.attempted}, {"decoded_ok", result.decoded_ok}, {"no_solution", result.no_solution},
          {"mismatched", result.mismatched}, {"failures", failures}};
}

Json to_json(const UniquenessResult& result) {
  return {{"codewords", result.codewords}, {"encodable", result.encodable}, {"collisions", result.collisions},
          {"unique", result.unique}};
}

std::string format_double(double x) { return to_chars_string(x, std::chars_format::general, -1); }

std::string format_short(double x) { return to_chars_string(x, std::chars_format::general, 6); }

std::string efficiency_csv(std::span<const EfficiencyRow> rows) {
  std::ostringstream os;
  os << "d,capacity_bits,max_info_bits,ratio\n";
  for (const auto& r : rows) {
    os << r.d << ',' << format_double(r.capacity_bits) << ',' << format_double(r.max_info_bits) << ','
       << format_double(r.ratio) << '\n';
  }
  return os.str();
}

}  // namespace mubenc
