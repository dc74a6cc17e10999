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

#include "bnbaudit/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace bnbaudit {

using nlohmann::json;

namespace {

constexpr const char* kReportFormat = "bnb-auditor-report";

json optional_extended(const std::optional<ExtendedRational>& value) {
   return value ? json(value->str()) : json(nullptr);
}

std::optional<ExtendedRational> optional_extended_from(const json& value) {
   if( value.is_null() )
      return std::nullopt;
   return ExtendedRational::parse(value.get<std::string>());
}

std::string percentage(std::int64_t part, std::int64_t whole) {
   char buffer[32];
   std::snprintf(buffer, sizeof(buffer), "%.2f%%", whole > 0 ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0);
   return buffer;
}

std::string approx(const ExtendedRational& value) {
   if( !value.is_finite() )
      return value.str();
   char buffer[40];
   std::snprintf(buffer, sizeof(buffer), "%.17g", value.to_double());
   return buffer;
}

std::string write_text(const VerificationReport& report) {
   std::ostringstream out;
   const VerdictCounts& c = report.counts;
   out << "model         " << report.model_name << " (" << report.model_hash << ")\n";
   out << "solver status " << to_string(report.solver_status) << "\n";
   char buffer[40];
   std::snprintf(buffer, sizeof(buffer), "%.17g", report.z_star);
   out << "z* (float)    " << buffer << "\n\n";

   out << "  leaves   Sol W   Sol S   Bound W   Bound S   Gap W   Gap S   Inf\n";
   std::snprintf(buffer, sizeof(buffer), "%8lld", static_cast<long long>(c.leaves));
   out << buffer;
   const std::pair<std::int64_t, int> cells[] = { { c.solution_weak, 8 }, { c.solution_strong, 8 },
                                                  { c.bound_weak, 10 },   { c.bound_strong, 10 },
                                                  { c.gap_weak, 8 },      { c.gap_strong, 8 },
                                                  { c.infeasibility, 6 } };
   for( const auto& [count, width] : cells ) {
      std::snprintf(buffer, sizeof(buffer), "%*lld", width, static_cast<long long>(count));
      out << buffer;
   }
   out << "\n\n";
   out << "verified      " << c.verified << "\n";
   out << "inconclusive  " << c.inconclusive << "\n";
   out << "unsolved      " << report.unsolved_nodes << "\n\n";

   out << "decided by\n";
   for( int t = 0; t < 4; ++t ) {
      const std::int64_t count = report.techniques[static_cast<std::size_t>(t)];
      std::snprintf(buffer, sizeof(buffer), "  %-15s", to_string(static_cast<Technique>(t)).c_str());
      out << buffer << count << "  (" << percentage(count, c.leaves) << ")\n";
   }
   out << "\n";

   if( report.interval.lower.is_plus_infinity() && report.interval.upper.is_plus_infinity() )
      out << "interval      no incumbent\n";
   else {
      out << "interval      [" << report.interval.lower.str() << ", " << report.interval.upper.str() << "]\n";
      out << "              [" << approx(report.interval.lower) << ", " << approx(report.interval.upper) << "]\n";
   }

   bool header = false;
   for( const LeafVerdict& verdict : report.verdicts ) {
      if( verdict.verdict == VerdictClass::Verified )
         continue;
      if( !header ) {
         out << "\nleaves not verified\n";
         header = true;
      }
      out << "  node " << verdict.node_id << " seq " << verdict.sequence << " " << to_string(verdict.kind) << ": "
          << to_string(verdict.verdict);
      if( verdict.technique )
         out << " by " << to_string(*verdict.technique);
      if( verdict.dual_bound )
         out << ", exact bound " << verdict.dual_bound->str();
      out << "\n";
   }
   return out.str();
}

json write_json(const VerificationReport& report) {
   const VerdictCounts& c = report.counts;
   json leaves = json::array();
   for( const LeafVerdict& verdict : report.verdicts ) {
      leaves.push_back({ { "seq", verdict.sequence },
                         { "node", verdict.node_id },
                         { "kind", to_string(verdict.kind) },
                         { "verdict", to_string(verdict.verdict) },
                         { "technique", verdict.technique ? json(to_string(*verdict.technique)) : json(nullptr) },
                         { "dual_bound", optional_extended(verdict.dual_bound) },
                         { "completion_objective", optional_extended(verdict.completion_objective) } });
   }
   json techniques = json::object();
   for( int t = 0; t < 4; ++t )
      techniques[to_string(static_cast<Technique>(t))] = report.techniques[static_cast<std::size_t>(t)];

   char z_star[64];
   std::snprintf(z_star, sizeof(z_star), "%a", report.z_star);
   return { { "format", kReportFormat },
            { "model_name", report.model_name },
            { "model_hash", report.model_hash },
            { "solver_status", to_string(report.solver_status) },
            { "z_star", z_star },
            { "counts",
              { { "leaves", c.leaves },
                { "verified", c.verified },
                { "sol_weak", c.solution_weak },
                { "sol_strong", c.solution_strong },
                { "bound_weak", c.bound_weak },
                { "bound_strong", c.bound_strong },
                { "gap_weak", c.gap_weak },
                { "gap_strong", c.gap_strong },
                { "inf", c.infeasibility },
                { "inconclusive", c.inconclusive } } },
            { "techniques", techniques },
            { "interval", { { "lower", report.interval.lower.str() }, { "upper", report.interval.upper.str() } } },
            { "unsolved_nodes", report.unsolved_nodes },
            { "leaves", leaves } };
}

}  // namespace

std::string write_report(const VerificationReport& report, ReportFormat format) {
   if( format == ReportFormat::Text )
      return write_text(report);
   return write_json(report).dump(2) + "\n";
}

VerificationReport parse_report_json(const std::string& text) {
   const json document = json::parse(text);
   if( document.at("format").get<std::string>() != kReportFormat )
      throw std::invalid_argument("not a verification report");
   VerificationReport report;
   report.model_name = document.at("model_name").get<std::string>();
   report.model_hash = document.at("model_hash").get<std::string>();
   report.solver_status = bnb_status_from_string(document.at("solver_status").get<std::string>());
   report.z_star = std::strtod(document.at("z_star").get<std::string>().c_str(), nullptr);

   const json& c = document.at("counts");
   report.counts.leaves = c.at("leaves").get<std::int64_t>();
   report.counts.verified = c.at("verified").get<std::int64_t>();
   report.counts.solution_weak = c.at("sol_weak").get<std::int64_t>();
   report.counts.solution_strong = c.at("sol_strong").get<std::int64_t>();
   report.counts.bound_weak = c.at("bound_weak").get<std::int64_t>();
   report.counts.bound_strong = c.at("bound_strong").get<std::int64_t>();
   report.counts.gap_weak = c.at("gap_weak").get<std::int64_t>();
   report.counts.gap_strong = c.at("gap_strong").get<std::int64_t>();
   report.counts.infeasibility = c.at("inf").get<std::int64_t>();
   report.counts.inconclusive = c.at("inconclusive").get<std::int64_t>();

   for( int t = 0; t < 4; ++t ) {
      report.techniques[static_cast<std::size_t>(t)] =
         document.at("techniques").at(to_string(static_cast<Technique>(t))).get<std::int64_t>();
   }
   report.interval.lower = ExtendedRational::parse(document.at("interval").at("lower").get<std::string>());
   report.interval.upper = ExtendedRational::parse(document.at("interval").at("upper").get<std::string>());
   report.unsolved_nodes = document.at("unsolved_nodes").get<std::int64_t>();

   for( const json& leaf : document.at("leaves") ) {
      LeafVerdict verdict;
      verdict.sequence = leaf.at("seq").get<std::int64_t>();
      verdict.node_id = leaf.at("node").get<int>();
      verdict.kind = event_kind_from_string(leaf.at("kind").get<std::string>());
      verdict.verdict = verdict_class_from_string(leaf.at("verdict").get<std::string>());
      if( !leaf.at("technique").is_null() )
         verdict.technique = technique_from_string(leaf.at("technique").get<std::string>());
      verdict.dual_bound = optional_extended_from(leaf.at("dual_bound"));
      verdict.completion_objective = optional_extended_from(leaf.at("completion_objective"));
      report.verdicts.push_back(std::move(verdict));
   }
   return report;
}

}  // namespace bnbaudit
