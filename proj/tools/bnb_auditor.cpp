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

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "bnbaudit/pipeline.hpp"

using namespace bnbaudit;

namespace {

void add_options(CLI::App* command, RunConfig& config, std::string& level, std::string& presolve, std::string& format) {
   command->add_option("model", config.input, "MPS model file")->required();
   command->add_option("--events", config.events_path, "event log path (JSON lines)");
   command->add_option("--output", config.output_path, "write the report here instead of stdout");
   command->add_option("--feastol", config.feastol, "primal feasibility tolerance")->capture_default_str();
   command->add_option("--inttol", config.inttol, "integrality tolerance (default: feastol)");
   command->add_option("--zerotol", config.zerotol, "equality tolerance")->capture_default_str();
   command->add_option("--time-limit", config.time_limit, "time limit in seconds");
   command->add_option("--node-limit", config.node_limit, "maximum number of processed nodes");
   command->add_option("--permute", config.permute_seed, "permute rows and columns with this seed");
   command->add_option("--max-denominator", config.max_denominator, "denominator limit for reconstruction")
      ->capture_default_str();
   command->add_option("--verify-level", level, "highest verification technique")
      ->check(CLI::IsMember({ "safe", "reconstruct", "factorize", "exact" }))
      ->capture_default_str();
   command->add_option("--presolve", presolve, "cleanup and bound propagation")
      ->check(CLI::IsMember({ "on", "off" }))
      ->capture_default_str();
   command->add_option("--report", format, "report format")
      ->check(CLI::IsMember({ "text", "json" }))
      ->capture_default_str();
   command->add_option("--jobs", config.jobs, "verification threads (0 = all hardware threads)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
   CLI::App app{ "Floating-point branch-and-bound with exact a-posteriori leaf verification" };
   app.require_subcommand(1);

   RunConfig config;
   std::string level = "exact";
   std::string presolve = "on";
   std::string format = "text";
   const std::map<std::string, Subcommand> commands = { { "solve", Subcommand::Solve },
                                                         { "verify", Subcommand::Verify },
                                                         { "run", Subcommand::Run } };
   add_options(app.add_subcommand("solve", "solve and write the event log"), config, level, presolve, format);
   add_options(app.add_subcommand("verify", "verify an event log against the model"), config, level, presolve, format);
   add_options(app.add_subcommand("run", "solve, then verify"), config, level, presolve, format);

   try {
      app.parse(argc, argv);
   }
   catch( const CLI::ParseError& error ) {
      const int code = app.exit(error);
      return code == 0 ? 0 : 2;
   }

   config.subcommand = commands.at(app.get_subcommands().front()->get_name());
   config.verify_level = verify_level_from_string(level);
   config.presolve = presolve == "on";
   config.report_format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
   if( const char* seed = std::getenv("BNB_AUDITOR_SEED"); seed != nullptr && *seed != '\0' ) {
      try {
         config.permute_seed = std::stoull(seed);
      }
      catch( const std::exception& ) {
         std::cerr << "bnb-auditor: BNB_AUDITOR_SEED is not an unsigned integer\n";
         return 2;
      }
   }
   return run_pipeline(config, std::cout, std::cerr);
}
