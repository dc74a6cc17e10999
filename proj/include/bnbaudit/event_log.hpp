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

#ifndef BNBAUDIT_EVENT_LOG_HPP_
#define BNBAUDIT_EVENT_LOG_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnbaudit/bnb.hpp"

namespace bnbaudit {

class EventLogError : public std::runtime_error {
public:
   using std::runtime_error::runtime_error;
};

struct EventLogHeader {
   std::string model_hash;
   std::string model_name;
   bool presolve = true;
   std::optional<std::uint64_t> permute_seed;
   BnbTolerances tolerances;
   BnbLimits limits;
};

struct EventLogSummary {
   BnbStatus status = BnbStatus::Infeasible;
   double objective = 0.0;
   std::optional<std::vector<double>> incumbent;
   std::vector<NodePath> unsolved;
   std::int64_t nodes_created = 0;
   std::int64_t nodes_processed = 0;
   std::int64_t nodes_branched = 0;
};

/// One header record, one record per event, one summary record; each a
/// single JSON object on its own line.
struct EventLog {
   EventLogHeader header;
   std::vector<BnbEvent> events;
   EventLogSummary summary;
};

EventLog make_event_log(EventLogHeader header, const BnbOutcome& outcome);

/// "<shortest round-trip decimal>|0x<16 hex digits of the bit pattern>"
std::string encode_float(double value);
/// Uses the bit pattern; the decimal part is informational.
double decode_float(const std::string& text);

void write_event_log(std::ostream& out, const EventLog& log);
EventLog read_event_log(std::istream& in);

}  // namespace bnbaudit

#endif
