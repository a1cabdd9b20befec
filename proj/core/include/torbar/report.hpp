#pragma once

#include "torbar/tor.hpp"

namespace torbar {

enum class OutputFormat { Human, Json };

/// FNV-1a 64-bit hex digest of the canonical input text.
std::string digest_hex(const std::string& text);

struct ReportHeader {
  std::string command;
  std::string input_digest;
  int max_degree = 0;
};

std::string format_tor_report(const ReportHeader& hdr, const TorRequest& req,
                              const TorResult& res, const CrosscheckReport* oracle_check,
                              OutputFormat fmt);

std::string format_cohomology_report(const ReportHeader& hdr, const CohomologyTable& table,
                                     const AlgebraPresentation& pres, bool want_ring,
                                     OutputFormat fmt);

std::string format_massey_report(const ReportHeader& hdr, const MasseyResult& res,
                                 const AlgebraPresentation& pres, OutputFormat fmt);

std::string format_homotopy_report(const ReportHeader& hdr,
                                   const std::map<int, int>& dims, OutputFormat fmt);

std::string format_check_report(const ReportHeader& hdr,
                                const std::vector<std::pair<std::string, bool>>& checks,
                                OutputFormat fmt);

/// Machine-parsable failure line for nonzero exits.
std::string format_error(const std::string& reason_kind, const std::string& message,
                         OutputFormat fmt);

}  // namespace torbar
