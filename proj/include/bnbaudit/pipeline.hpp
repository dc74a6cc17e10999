/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*               This file is part of the program and library                */
/*    BNB-AUDITOR                                                            */
/*                                                                           */
/* Copyright (C) 2026                                                        */
/*                                                                           */
/*  Licensed under the Apache License, Version 2.0 (the "License");          */
/*  you may not use this file except in compliance with the License.         */
/*  You may obtain a copy of the License at                                  */
/*                                                                           */
/*      http://www.apache.org/licenses/LICENSE-2.0                           */
/*                                                                           */
/*  Unless required by applicable law or agreed to in writing, software      */
/*  distributed under the License is distributed on an "AS IS" BASIS,        */
/*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. */
/*  See the License for the specific language governing permissions and      */
/*  limitations under the License.                                           */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */

#ifndef BNBAUDIT_PIPELINE_HPP_
#define BNBAUDIT_PIPELINE_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>

#include "bnbaudit/event_log.hpp"
#include "bnbaudit/report.hpp"
#include "bnbaudit/verifier.hpp"

namespace bnbaudit {

enum class Subcommand : std::uint8_t { Solve, Verify, Run };

struct RunConfig {
   Subcommand subcommand = Subcommand::Run;
   std::string input;
   std::string feastol = "1e-6";
   std::optional<std::string> inttol;  ///< defaults to feastol
   std::string zerotol = "1e-9";
   double time_limit = std::numeric_limits<double>::infinity();
   std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
   std::optional<std::uint64_t> permute_seed;
   std::uint64_t max_denominator = std::uint64_t{ 1 } << 32;
   VerifyLevel verify_level = VerifyLevel::Exact;
   bool presolve = true;
   ReportFormat report_format = ReportFormat::Text;
   std::string events_path;  ///< required for solve and verify
   std::string output_path;  ///< report destination, stdout when empty
   int jobs = 0;             ///< 0 = one per hardware thread
};

inline constexpr int kPresolveRounds = 10;

/// Parses the model and applies cleanup, propagation and the permutation.
MipProblem prepare_model(const std::string& path, bool presolve, std::optional<std::uint64_t> permute_seed);

/// Exact decimal tolerance to binary64; throws std::invalid_argument unless
/// strictly positive.
double parse_tolerance(const std::string& text);

struct PipelineResult {
   int exit_code = 0;
   std::optional<EventLog> log;
   std::optional<VerificationReport> report;
};

/// Runs the subcommand. Exit code 0 when every leaf is Verified, 1 when the
/// report holds errors or undecided leaves, 2 on usage or I/O failure.
PipelineResult execute_pipeline(const RunConfig& config, std::ostream& out, std::ostream& err);

int run_pipeline(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bnbaudit

#endif
