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

#include "bnbaudit/event_log.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace bnbaudit {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "bnb-auditor-events";
constexpr int kVersion = 1;

json floats_to_json(const std::vector<double>& values) {
   json array = json::array();
   for( double value : values )
      array.push_back(encode_float(value));
   return array;
}

std::vector<double> floats_from_json(const json& array) {
   std::vector<double> values;
   values.reserve(array.size());
   for( const json& item : array )
      values.push_back(decode_float(item.get<std::string>()));
   return values;
}

json path_to_json(const NodePath& path) {
   json changes = json::array();
   for( const BoundChange& change : path.changes ) {
      changes.push_back({ { "var", change.variable },
                          { "dir", change.direction == BranchDirection::Up ? "up" : "down" },
                          { "bound", change.bound.str() } });
   }
   return { { "id", path.node_id }, { "parent", path.parent_id }, { "depth", path.depth }, { "changes", changes } };
}

NodePath path_from_json(const json& object) {
   NodePath path;
   path.node_id = object.at("id").get<int>();
   path.parent_id = object.at("parent").get<int>();
   path.depth = object.at("depth").get<int>();
   for( const json& change : object.at("changes") ) {
      const std::string dir = change.at("dir").get<std::string>();
      if( dir != "up" && dir != "down" )
         throw EventLogError("unknown branching direction '" + dir + "'");
      path.changes.push_back(BoundChange{ change.at("var").get<int>(),
                                          dir == "up" ? BranchDirection::Up : BranchDirection::Down,
                                          Rational::parse(change.at("bound").get<std::string>()) });
   }
   return path;
}

json basis_to_json(const Basis& basis) {
   json structural = json::array();
   for( VarStatus status : basis.structural )
      structural.push_back(to_string(status));
   json logical = json::array();
   for( VarStatus status : basis.logical )
      logical.push_back(to_string(status));
   return { { "structural", structural }, { "logical", logical } };
}

Basis basis_from_json(const json& object) {
   Basis basis;
   for( const json& item : object.at("structural") )
      basis.structural.push_back(var_status_from_string(item.get<std::string>()));
   for( const json& item : object.at("logical") )
      basis.logical.push_back(var_status_from_string(item.get<std::string>()));
   return basis;
}

json event_to_json(const BnbEvent& event) {
   json record = { { "record", "event" },
                   { "seq", event.sequence },
                   { "kind", to_string(event.kind) },
                   { "path", path_to_json(event.path) },
                   { "primal_bound", encode_float(event.primal_bound) } };
   if( event.kind == EventKind::NodeInfeasible )
      record["lp_status"] = to_string(event.lp_status);
   const bool has_solution = event.kind == EventKind::NodeFeasible || event.kind == EventKind::BestSolution
                             || event.lp_status == LeafLpStatus::PrunedAfterSolve;
   if( has_solution ) {
      record["objective"] = encode_float(event.objective);
      record["x"] = floats_to_json(event.x);
   }
   if( has_solution && event.kind != EventKind::BestSolution ) {
      record["y"] = floats_to_json(event.y);
      record["r_plus"] = floats_to_json(event.reduced_plus);
      record["r_minus"] = floats_to_json(event.reduced_minus);
   }
   if( event.basis )
      record["basis"] = basis_to_json(*event.basis);
   if( event.lp_status == LeafLpStatus::Infeasible )
      record["farkas"] = floats_to_json(event.farkas);
   return record;
}

BnbEvent event_from_json(const json& record) {
   BnbEvent event;
   event.sequence = record.at("seq").get<std::int64_t>();
   event.kind = event_kind_from_string(record.at("kind").get<std::string>());
   event.path = path_from_json(record.at("path"));
   event.primal_bound = decode_float(record.at("primal_bound").get<std::string>());
   if( record.contains("lp_status") )
      event.lp_status = leaf_lp_status_from_string(record.at("lp_status").get<std::string>());
   if( record.contains("objective") )
      event.objective = decode_float(record.at("objective").get<std::string>());
   if( record.contains("x") )
      event.x = floats_from_json(record.at("x"));
   if( record.contains("r_plus") ) {
      event.y = floats_from_json(record.at("y"));
      event.reduced_plus = floats_from_json(record.at("r_plus"));
      event.reduced_minus = floats_from_json(record.at("r_minus"));
   }
   if( record.contains("basis") )
      event.basis = basis_from_json(record.at("basis"));
   if( record.contains("farkas") )
      event.farkas = floats_from_json(record.at("farkas"));
   return event;
}

}  // namespace

EventLog make_event_log(EventLogHeader header, const BnbOutcome& outcome) {
   EventLog log;
   log.header = std::move(header);
   log.events = outcome.events;
   log.summary.status = outcome.status;
   log.summary.objective = outcome.objective;
   log.summary.incumbent = outcome.incumbent;
   log.summary.unsolved = outcome.unsolved;
   log.summary.nodes_created = outcome.statistics.nodes_created;
   log.summary.nodes_processed = outcome.statistics.nodes_processed;
   log.summary.nodes_branched = outcome.statistics.nodes_branched;
   return log;
}

std::string encode_float(double value) {
   char buffer[64];
   const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
   char bits[24];
   std::snprintf(bits, sizeof(bits), "|0x%016llx", static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(value)));
   return std::string(buffer, result.ptr) + bits;
}

double decode_float(const std::string& text) {
   const auto bar = text.find("|0x");
   if( bar == std::string::npos || text.size() != bar + 19 )
      throw EventLogError("malformed float '" + text + "'");
   std::uint64_t bits = 0;
   const char* first = text.data() + bar + 3;
   const char* last = text.data() + text.size();
   const auto result = std::from_chars(first, last, bits, 16);
   if( result.ec != std::errc() || result.ptr != last )
      throw EventLogError("malformed float '" + text + "'");
   return std::bit_cast<double>(bits);
}

void write_event_log(std::ostream& out, const EventLog& log) {
   const EventLogHeader& header = log.header;
   json record = { { "record", "header" },
                   { "format", kFormat },
                   { "version", kVersion },
                   { "model_hash", header.model_hash },
                   { "model_name", header.model_name },
                   { "presolve", header.presolve },
                   { "feastol", encode_float(header.tolerances.feastol) },
                   { "inttol", encode_float(header.tolerances.inttol) },
                   { "zerotol", encode_float(header.tolerances.zerotol) },
                   { "opttol", encode_float(header.tolerances.opttol) },
                   { "time_limit", encode_float(header.limits.time_seconds) },
                   { "node_limit", header.limits.nodes },
                   { "lp_iteration_limit", header.limits.lp_iterations } };
   record["permute_seed"] = header.permute_seed ? json(*header.permute_seed) : json(nullptr);
   out << record.dump() << '\n';

   for( const BnbEvent& event : log.events )
      out << event_to_json(event).dump() << '\n';

   const EventLogSummary& summary = log.summary;
   json unsolved = json::array();
   for( const NodePath& path : summary.unsolved )
      unsolved.push_back(path_to_json(path));
   json tail = { { "record", "summary" },
                 { "status", to_string(summary.status) },
                 { "objective", encode_float(summary.objective) },
                 { "unsolved", unsolved },
                 { "nodes_created", summary.nodes_created },
                 { "nodes_processed", summary.nodes_processed },
                 { "nodes_branched", summary.nodes_branched } };
   tail["incumbent"] = summary.incumbent ? floats_to_json(*summary.incumbent) : json(nullptr);
   out << tail.dump() << '\n';
}

EventLog read_event_log(std::istream& in) {
   EventLog log;
   bool have_header = false;
   bool have_summary = false;
   std::string line;
   int line_number = 0;
   while( std::getline(in, line) ) {
      ++line_number;
      if( line.empty() )
         continue;
      if( have_summary )
         throw EventLogError("record after summary on line " + std::to_string(line_number));
      try {
         const json record = json::parse(line);
         const std::string type = record.at("record").get<std::string>();
         if( !have_header ) {
            if( type != "header" || record.at("format").get<std::string>() != kFormat )
               throw EventLogError("missing event log header");
            if( record.at("version").get<int>() != kVersion )
               throw EventLogError("unsupported event log version");
            EventLogHeader& header = log.header;
            header.model_hash = record.at("model_hash").get<std::string>();
            header.model_name = record.at("model_name").get<std::string>();
            header.presolve = record.at("presolve").get<bool>();
            if( !record.at("permute_seed").is_null() )
               header.permute_seed = record.at("permute_seed").get<std::uint64_t>();
            header.tolerances.feastol = decode_float(record.at("feastol").get<std::string>());
            header.tolerances.inttol = decode_float(record.at("inttol").get<std::string>());
            header.tolerances.zerotol = decode_float(record.at("zerotol").get<std::string>());
            header.tolerances.opttol = decode_float(record.at("opttol").get<std::string>());
            header.limits.time_seconds = decode_float(record.at("time_limit").get<std::string>());
            header.limits.nodes = record.at("node_limit").get<std::int64_t>();
            header.limits.lp_iterations = record.at("lp_iteration_limit").get<int>();
            have_header = true;
         }
         else if( type == "event" ) {
            BnbEvent event = event_from_json(record);
            if( !log.events.empty() && event.sequence <= log.events.back().sequence )
               throw EventLogError("event sequence numbers must increase");
            log.events.push_back(std::move(event));
         }
         else if( type == "summary" ) {
            EventLogSummary& summary = log.summary;
            summary.status = bnb_status_from_string(record.at("status").get<std::string>());
            summary.objective = decode_float(record.at("objective").get<std::string>());
            for( const json& path : record.at("unsolved") )
               summary.unsolved.push_back(path_from_json(path));
            summary.nodes_created = record.at("nodes_created").get<std::int64_t>();
            summary.nodes_processed = record.at("nodes_processed").get<std::int64_t>();
            summary.nodes_branched = record.at("nodes_branched").get<std::int64_t>();
            if( !record.at("incumbent").is_null() )
               summary.incumbent = floats_from_json(record.at("incumbent"));
            have_summary = true;
         }
         else
            throw EventLogError("unknown record type '" + type + "'");
      }
      catch( const EventLogError& error ) {
         throw EventLogError("line " + std::to_string(line_number) + ": " + error.what());
      }
      catch( const std::exception& error ) {
         throw EventLogError("line " + std::to_string(line_number) + ": " + error.what());
      }
   }
   if( !have_header )
      throw EventLogError("empty event log");
   if( !have_summary )
      throw EventLogError("event log is truncated (no summary record)");
   return log;
}

}  // namespace bnbaudit
