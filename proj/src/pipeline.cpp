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

#include "bnbaudit/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bnbaudit/bnb.hpp"

namespace bnbaudit {

MipProblem prepare_model(const std::string& path, bool presolve, std::optional<std::uint64_t> permute_seed) {
   MipProblem problem = parse_mps_file(path);
   if( presolve ) {
      problem = cleanup_model(problem);
      problem = propagate_bounds(problem, kPresolveRounds);
   }
   if( permute_seed )
      problem = permute_model(problem, *permute_seed);
   return problem;
}

double parse_tolerance(const std::string& text) {
   const Rational value = Rational::parse(text);
   if( value.sign() <= 0 )
      throw std::invalid_argument("tolerance must be positive: '" + text + "'");
   return value.to_double();
}

namespace {

class UsageError : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
};

void write_summary(std::ostream& out, const BnbOutcome& outcome) {
   char objective[40];
   std::snprintf(objective, sizeof(objective), "%.17g", outcome.objective);
   const BnbStatistics& s = outcome.statistics;
   out << "status     " << to_string(outcome.status) << "\n"
       << "objective  " << objective << "\n"
       << "nodes      " << s.nodes_processed << " processed, " << s.nodes_created << " created, " << s.nodes_branched
       << " branched\n"
       << "leaves     " << s.leaves_feasible << " feasible, " << s.leaves_infeasible << " infeasible, "
       << s.leaves_pruned << " pruned, " << s.leaves_deleted << " deleted\n";
   if( !outcome.unsolved.empty() )
      out << "unsolved   " << outcome.unsolved.size() << " nodes hit the LP iteration limit\n";
}

void emit_report(const RunConfig& config, const VerificationReport& report, std::ostream& out) {
   const std::string text = write_report(report, config.report_format);
   if( config.output_path.empty() ) {
      out << text;
      return;
   }
   std::ofstream file(config.output_path, std::ios::binary);
   if( !file || !(file << text) )
      throw UsageError("cannot write report to '" + config.output_path + "'");
}

}  // namespace

PipelineResult execute_pipeline(const RunConfig& config, std::ostream& out, std::ostream& err) {
   PipelineResult result;
   try {
      if( config.input.empty() )
         throw UsageError("no model file given");
      if( config.subcommand != Subcommand::Run && config.events_path.empty() )
         throw UsageError("--events is required for this subcommand");
      if( config.jobs < 0 )
         throw UsageError("--jobs must be nonnegative");
      if( config.max_denominator == 0 )
         throw UsageError("--max-denominator must be positive");

      EventLog log;
      MipProblem problem;
      if( config.subcommand == Subcommand::Verify ) {
         std::ifstream in(config.events_path, std::ios::binary);
         if( !in )
            throw UsageError("cannot read event log '" + config.events_path + "'");
         log = read_event_log(in);
         problem = prepare_model(config.input, log.header.presolve, log.header.permute_seed);
         const std::string hash = model_hash(problem);
         if( hash != log.header.model_hash )
            throw UsageError("model mismatch: event log was written for model hash " + log.header.model_hash
                             + ", this model hashes to " + hash);
      }
      else {
         BnbTolerances tolerances;
         tolerances.feastol = parse_tolerance(config.feastol);
         tolerances.inttol = parse_tolerance(config.inttol.value_or(config.feastol));
         tolerances.zerotol = parse_tolerance(config.zerotol);
         BnbLimits limits;
         limits.time_seconds = config.time_limit;
         limits.nodes = config.node_limit;
         if( !(limits.time_seconds > 0.0) || limits.nodes <= 0 )
            throw UsageError("limits must be positive");

         problem = prepare_model(config.input, config.presolve, config.permute_seed);
         EventLogHeader header;
         header.model_hash = model_hash(problem);
         header.model_name = problem.name;
         header.presolve = config.presolve;
         header.permute_seed = config.permute_seed;
         header.tolerances = tolerances;
         header.limits = limits;

         const BnbOutcome outcome = solve_bnb(problem, tolerances, limits);
         log = make_event_log(std::move(header), outcome);
         if( !config.events_path.empty() ) {
            std::ofstream file(config.events_path, std::ios::binary);
            if( !file )
               throw UsageError("cannot write event log '" + config.events_path + "'");
            write_event_log(file, log);
            if( !file )
               throw UsageError("cannot write event log '" + config.events_path + "'");
         }
         if( config.subcommand == Subcommand::Solve ) {
            write_summary(out, outcome);
            result.exit_code = 0;
            result.log = std::move(log);
            return result;
         }
      }

      VerifyOptions options;
      options.max_denominator = config.max_denominator;
      options.level_cap = config.verify_level;
      options.tolerances = log.header.tolerances;
      options.lp_iteration_limit = log.header.limits.lp_iterations;
      VerificationReport report = verify_events_parallel(problem, log, options, config.jobs);
      emit_report(config, report, out);
      result.exit_code = report.fully_verified() ? 0 : 1;
      result.log = std::move(log);
      result.report = std::move(report);
   }
   catch( const std::exception& error ) {
      err << "bnb-auditor: " << error.what() << "\n";
      result.exit_code = 2;
   }
   return result;
}

int run_pipeline(const RunConfig& config, std::ostream& out, std::ostream& err) {
   return execute_pipeline(config, out, err).exit_code;
}

}  // namespace bnbaudit
