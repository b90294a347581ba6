#include "gl3sw/io.hpp"

#include <sstream>

namespace gl3sw {

Json char_to_json(const FormalCharacter& c) {
  Json arr = Json::array();
  for (const auto& [w, m] : c.entries())  // map order = sorted by weight
    arr.push_back({{"weight", to_string(w)}, {"mult", m}});
  return arr;
}

Json summands_to_json(const SummandList& list) {
  Json arr = Json::array();
  for (const Summand& s : list)
    arr.push_back({{"kind", s.kind == SummandKind::Simple ? "L" : "T"},
                   {"weight", to_string(s.highest)},
                   {"mult", s.mult}});
  return arr;
}

Json socle_to_json(const SocleReport& report) {
  Json arr = Json::array();
  for (const WeightTuple& t : report.constituents) arr.push_back(to_string(t));
  return Json{{"constituents", arr}, {"exact", report.exact}};
}

Json verdict_to_json(const ExtVerdict& v) {
  Json matches = Json::array();
  for (const ShiftMatch& m : v.matches)
    matches.push_back({{"j0", m.j0}, {"alpha", shift_name(m.alpha)}, {"good", m.good}});
  Json out{{"status", ext_status_name(v.status)},
           {"matches", matches},
           {"bad_forward", v.bad_forward},
           {"bad_backward", v.bad_backward},
           {"h1_dim", v.h1_dim},
           {"twist_policy", v.policy == TwistPolicy::UpToTwist ? "up-to-twist" : "on-the-nose"}};
  if (v.bad_forward_witness)
    out["bad_forward_witness"] = {{"j0", v.bad_forward_witness->first},
                                  {"alpha", shift_name(v.bad_forward_witness->second)}};
  if (v.bad_backward_witness)
    out["bad_backward_witness"] = {{"j0", v.bad_backward_witness->first},
                                   {"alpha", shift_name(v.bad_backward_witness->second)}};
  return out;
}

Json support_to_json(const std::vector<SupportEntry>& entries) {
  Json arr = Json::array();
  for (const SupportEntry& e : entries)
    arr.push_back({{"nu", to_string(e.nu)}, {"dims", e.dims}, {"total", e.total}});
  return arr;
}

Json scan_to_json(const ScanResult& result, bool with_records) {
  Json counts;
  for (const auto& [status, n] : result.counts) counts[ext_status_name(status)] = n;
  Json out{{"total", result.total}, {"counts", counts}};
  if (with_records) {
    Json records = Json::array();
    for (const ScanRecord& r : result.records)
      records.push_back({{"lambda", to_string(r.lam)},
                         {"lambda_prime", to_string(r.lamp)},
                         {"verdict", verdict_to_json(r.verdict)}});
    out["records"] = records;
  }
  return out;
}

std::string scan_to_csv(const ScanResult& result) {
  std::ostringstream os;
  os << "lambda,lambda_prime,status,bad_forward,bad_backward,h1_dim\n";
  for (const ScanRecord& r : result.records) {
    os << '"' << to_string(r.lam) << "\",\"" << to_string(r.lamp) << "\","
       << ext_status_name(r.verdict.status) << ',' << (r.verdict.bad_forward ? 1 : 0) << ','
       << (r.verdict.bad_backward ? 1 : 0) << ',' << r.verdict.h1_dim << '\n';
  }
  return os.str();
}

}  // namespace gl3sw
