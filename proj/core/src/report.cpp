#include "torbar/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace torbar {

using nlohmann::json;

std::string digest_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

namespace {

json header_json(const ReportHeader& hdr) {
  return json{{"command", hdr.command},
              {"input_digest", hdr.input_digest},
              {"max_degree", hdr.max_degree}};
}

std::string header_human(const ReportHeader& hdr) {
  return hdr.command + "  (input " + hdr.input_digest + ", max degree " +
         std::to_string(hdr.max_degree) + ")\n";
}

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_str(x));
  return a;
}

std::string vec_str(const Vec& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rational_str(v[i]);
  }
  return out + "]";
}

}  // namespace

std::string format_tor_report(const ReportHeader& hdr, const TorRequest& req,
                              const TorResult& res, const CrosscheckReport* oracle_check,
                              OutputFormat fmt) {
  const auto& pres = req.algebra->presentation();
  if (fmt == OutputFormat::Json) {
    json j = header_json(hdr);
    json betti = json::array();
    for (int b : res.betti) betti.push_back(b);
    j["betti"] = betti;
    if (req.want_representatives) {
      json gens = json::object();
      for (int n = 0; n < static_cast<int>(res.generators.size()); ++n) {
        if (res.generators[n].empty()) continue;
        json per = json::array();
        for (const auto& g : res.generators[n]) per.push_back(g.display);
        gens[std::to_string(n)] = per;
      }
      j["generators"] = gens;
    }
    if (req.want_ring) {
      json ring = json::object();
      for (const auto& [key, e] : res.ring_constants) {
        std::string k = "(" + std::to_string(key[0]) + "," + std::to_string(key[1]) +
                        ")*(" + std::to_string(key[2]) + "," + std::to_string(key[3]) +
                        ")";
        ring[k] = e.outside_truncation ? json("outside truncation") : vec_json(e.coeffs);
      }
      j["ring_constants"] = ring;
      json ract = json::object();
      for (const auto& [key, e] : res.r_action) {
        std::string k = pres.generators[key.first].name + "*(" +
                        std::to_string(key.second[0]) + "," +
                        std::to_string(key.second[1]) + ")";
        ract[k] = e.outside_truncation ? json("outside truncation") : vec_json(e.coeffs);
      }
      j["r_action"] = ract;
    }
    if (req.mode == TorMode::Both) j["crosscheck_modes"] = res.modes_agree;
    if (oracle_check) {
      j["crosscheck_oracle"] =
          json{{"ok", oracle_check->ok},
               {"first_divergent_degree", oracle_check->first_divergent_degree},
               {"detail", oracle_check->detail}};
    }
    return j.dump(2) + "\n";
  }

  std::string out = header_human(hdr);
  out += "degree  betti\n";
  for (int n = 0; n < static_cast<int>(res.betti.size()); ++n)
    out += "  " + std::to_string(n) + "\t" + std::to_string(res.betti[n]) + "\n";
  if (req.want_representatives) {
    out += "generators:\n";
    for (const auto& gens : res.generators)
      for (const auto& g : gens)
        out += "  [" + std::to_string(g.degree) + "." + std::to_string(g.index) + "] " +
               g.display + "\n";
  }
  if (req.want_ring) {
    out += "ring constants (class of product over generators of the sum degree):\n";
    for (const auto& [key, e] : res.ring_constants) {
      out += "  (" + std::to_string(key[0]) + "." + std::to_string(key[1]) + ") * (" +
             std::to_string(key[2]) + "." + std::to_string(key[3]) + ") = ";
      out += e.outside_truncation ? "outside truncation" : vec_str(e.coeffs);
      out += "\n";
    }
    out += "r-action:\n";
    for (const auto& [key, e] : res.r_action) {
      out += "  " + pres.generators[key.first].name + " * (" +
             std::to_string(key.second[0]) + "." + std::to_string(key.second[1]) +
             ") = ";
      out += e.outside_truncation ? "outside truncation" : vec_str(e.coeffs);
      out += "\n";
    }
  }
  if (req.mode == TorMode::Both)
    out += std::string("mode crosscheck: ") + (res.modes_agree ? "pass" : "fail") + "\n";
  if (oracle_check)
    out += std::string("oracle crosscheck: ") +
           (oracle_check->ok ? "pass" : "fail: " + oracle_check->detail) + "\n";
  return out;
}

std::string format_cohomology_report(const ReportHeader& hdr, const CohomologyTable& table,
                                     const AlgebraPresentation& pres, bool want_ring,
                                     OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json j = header_json(hdr);
    json betti = json::object();
    for (const auto& [n, b] : table.betti) betti[std::to_string(n)] = b;
    j["betti"] = betti;
    json reps = json::object();
    for (const auto& [n, rs] : table.representatives) {
      if (rs.empty()) continue;
      json per = json::array();
      for (const auto& r : rs) per.push_back(element_str(r, pres));
      reps[std::to_string(n)] = per;
    }
    j["generators"] = reps;
    if (want_ring) {
      json ring = json::object();
      for (const auto& [key, v] : table.ring_constants) {
        auto [p, i, q, jdx] = key;
        std::string k = "(" + std::to_string(p) + "," + std::to_string(i) + ")*(" +
                        std::to_string(q) + "," + std::to_string(jdx) + ")";
        ring[k] = vec_json(v);
      }
      j["ring_constants"] = ring;
    }
    return j.dump(2) + "\n";
  }
  std::string out = header_human(hdr);
  out += "degree  betti\n";
  for (const auto& [n, b] : table.betti)
    out += "  " + std::to_string(n) + "\t" + std::to_string(b) + "\n";
  out += "generators:\n";
  for (const auto& [n, rs] : table.representatives)
    for (size_t i = 0; i < rs.size(); ++i)
      out += "  [" + std::to_string(n) + "." + std::to_string(i) + "] " +
             element_str(rs[i], pres) + "\n";
  if (want_ring) {
    out += "ring constants:\n";
    for (const auto& [key, v] : table.ring_constants) {
      auto [p, i, q, jdx] = key;
      out += "  (" + std::to_string(p) + "." + std::to_string(i) + ") * (" +
             std::to_string(q) + "." + std::to_string(jdx) + ") = " + vec_str(v) + "\n";
    }
  }
  return out;
}

std::string format_massey_report(const ReportHeader& hdr, const MasseyResult& res,
                                 const AlgebraPresentation& pres, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json j = header_json(hdr);
    j["defined"] = res.defined;
    if (res.defined) {
      j["representative"] = element_str(res.representative, pres);
      j["indeterminacy_dim"] = res.indeterminacy_dim;
      j["contains_zero"] = res.contains_zero;
    }
    return j.dump(2) + "\n";
  }
  std::string out = header_human(hdr);
  if (!res.defined) return out + "massey product undefined (a*b or b*c not exact)\n";
  out += "representative: " + element_str(res.representative, pres) + "\n";
  out += "indeterminacy dimension: " + std::to_string(res.indeterminacy_dim) + "\n";
  out += std::string("coset contains zero: ") + (res.contains_zero ? "yes" : "no") + "\n";
  return out;
}

std::string format_homotopy_report(const ReportHeader& hdr,
                                   const std::map<int, int>& dims, OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json j = header_json(hdr);
    json d = json::object();
    for (const auto& [n, v] : dims) d[std::to_string(n)] = v;
    j["homotopy_dims"] = d;
    return j.dump(2) + "\n";
  }
  std::string out = header_human(hdr);
  out += "degree  dim\n";
  for (const auto& [n, v] : dims)
    out += "  " + std::to_string(n) + "\t" + std::to_string(v) + "\n";
  return out;
}

std::string format_check_report(const ReportHeader& hdr,
                                const std::vector<std::pair<std::string, bool>>& checks,
                                OutputFormat fmt) {
  if (fmt == OutputFormat::Json) {
    json j = header_json(hdr);
    json c = json::object();
    bool all = true;
    for (const auto& [name, ok] : checks) {
      c[name] = ok;
      all = all && ok;
    }
    j["checks"] = c;
    j["ok"] = all;
    return j.dump(2) + "\n";
  }
  std::string out = header_human(hdr);
  for (const auto& [name, ok] : checks)
    out += std::string("  ") + (ok ? "pass  " : "FAIL  ") + name + "\n";
  return out;
}

std::string format_error(const std::string& reason_kind, const std::string& message,
                         OutputFormat fmt) {
  if (fmt == OutputFormat::Json)
    return json{{"error", reason_kind}, {"message", message}}.dump(2) + "\n";
  return "error (" + reason_kind + "): " + message + "\n";
}

}  // namespace torbar
