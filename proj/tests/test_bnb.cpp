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

#include <cmath>
#include <cstring>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"

#include "bnbaudit/bnb.hpp"
#include "bnbaudit/event_log.hpp"
#include "oracles/oracles.hpp"

using namespace bnbaudit;

namespace {

MipProblem fixture(const std::string& name) {
   return parse_mps_file(std::string(BNBAUDIT_FIXTURE_DIR) + "/" + name);
}

bool same_bits(double a, double b) {
   return std::memcmp(&a, &b, sizeof(double)) == 0;
}

int count_kind(const BnbOutcome& outcome, EventKind kind) {
   int count = 0;
   for( const BnbEvent& event : outcome.events )
      count += event.kind == kind ? 1 : 0;
   return count;
}

}  // namespace

TEST_CASE("choose_branch_variable") {
   const std::vector<bool> both = { true, true };
   CHECK(choose_branch_variable(std::vector<double>{ 0.5, 0.9 }, both, 1e-6) == 0);
   CHECK(choose_branch_variable(std::vector<double>{ 0.5, 0.5 }, both, 1e-6) == 0);
   CHECK(choose_branch_variable(std::vector<double>{ 1.0, 0.2 }, both, 1e-6) == 1);
   CHECK(choose_branch_variable(std::vector<double>{ 0.3, 0.6 }, both, 1e-6) == 1);
   CHECK(choose_branch_variable(std::vector<double>{ 1.0, 2.0 }, both, 1e-6) == -1);
   CHECK(choose_branch_variable(std::vector<double>{ 1.0 + 1e-7, 0.0 }, both, 1e-6) == -1);
   CHECK(choose_branch_variable(std::vector<double>{ 0.5, 0.3 }, std::vector<bool>{ false, true }, 1e-6) == 1);
}

TEST_CASE("single binary") {
   MipProblem p;
   p.add_variable("x", -1, 0, 1, true);
   p.reset_origins();
   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
   CHECK(outcome.status == BnbStatus::Optimal);
   CHECK(outcome.objective == -1.0);
   REQUIRE(outcome.incumbent.has_value());
   CHECK(*outcome.incumbent == std::vector<double>{ 1.0 });
   CHECK(outcome.statistics.nodes_created == 1);
   REQUIRE(outcome.events.size() == 2);
   CHECK(outcome.events[0].kind == EventKind::BestSolution);
   CHECK(outcome.events[1].kind == EventKind::NodeFeasible);
   CHECK(outcome.events[1].primal_bound == -1.0);
}

TEST_CASE("tree shape of the small binary instance") {
   const MipProblem p = fixture("small_tree.mps");
   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
   CHECK(outcome.status == BnbStatus::Optimal);
   CHECK(outcome.objective == 2.0);
   CHECK(outcome.statistics.nodes_created == 5);
   CHECK(outcome.statistics.nodes_branched == 2);
   REQUIRE(outcome.events.size() == 4);

   const BnbEvent& best = outcome.events[0];
   CHECK(best.kind == EventKind::BestSolution);
   CHECK(best.objective == 2.0);

   const BnbEvent& feasible = outcome.events[1];
   CHECK(feasible.kind == EventKind::NodeFeasible);
   CHECK(feasible.path.depth == 2);
   REQUIRE(feasible.path.changes.size() == 2);
   // first branch on x2, then on x3
   CHECK(feasible.path.changes[0].variable == 1);
   CHECK(feasible.path.changes[1].variable == 2);

   const BnbEvent& infeasible = outcome.events[2];
   CHECK(infeasible.kind == EventKind::NodeInfeasible);
   CHECK(infeasible.lp_status == LeafLpStatus::Infeasible);
   CHECK(infeasible.path.depth == 2);
   CHECK(infeasible.path.parent_id == feasible.path.parent_id);
   CHECK_FALSE(infeasible.farkas.empty());

   const BnbEvent& pruned = outcome.events[3];
   CHECK(pruned.kind == EventKind::NodeInfeasible);
   CHECK(pruned.lp_status == LeafLpStatus::PrunedAfterSolve);
   CHECK(pruned.path.depth == 1);
   CHECK(pruned.objective == 2.5);
   CHECK(pruned.path.changes[0].variable == 1);
   CHECK(pruned.path.changes[0].direction == BranchDirection::Down);
}

TEST_CASE("integer infeasible model") {
   MipProblem p;
   p.add_variable("x", 0, 0, 1, true);
   p.add_row("up", { { 0, 2 } }, 1);
   p.add_row("down", { { 0, -2 } }, -1);
   p.reset_origins();
   REQUIRE_FALSE(oracle::brute_force_mip(p).has_value());

   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
   CHECK(outcome.status == BnbStatus::Infeasible);
   CHECK_FALSE(outcome.incumbent.has_value());
   CHECK(outcome.statistics.nodes_created == 3);
   REQUIRE(outcome.events.size() == 2);
   for( const BnbEvent& event : outcome.events ) {
      CHECK(event.kind == EventKind::NodeInfeasible);
      CHECK(event.lp_status == LeafLpStatus::Infeasible);
   }
}

TEST_CASE("replay_path") {
   const MipProblem p = fixture("small_tree.mps");
   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
   const NodePath& path = outcome.events[1].path;
   const LocalBounds bounds = replay_path(p, path);
   CHECK(bounds.lower[1] == ExtendedRational(1));
   CHECK(bounds.lower[2] == ExtendedRational(1));
   CHECK(bounds.upper[0] == ExtendedRational(1));
   CHECK(replay_path(p, NodePath{}) == LocalBounds::of(p));
}

TEST_CASE("replaying a node reproduces its LP bit for bit") {
   std::mt19937_64 rng(51);
   int replayed = 0;
   for( int k = 0; k < 40; ++k ) {
      const MipProblem p = oracle::random_binary_mip(rng, 6, 6);
      const BnbTolerances tolerances;
      const BnbOutcome outcome = solve_bnb(p, tolerances, BnbLimits{});
      for( const BnbEvent& event : outcome.events ) {
         if( event.kind == EventKind::NodeDeleted || event.kind == EventKind::BestSolution )
            continue;
         const FpLpResult lp = solve_lp_fp(p, replay_path(p, event.path), tolerances.lp(), 100000);
         ++replayed;
         if( event.lp_status == LeafLpStatus::Infeasible ) {
            REQUIRE(lp.status == LpStatus::Infeasible);
            REQUIRE(lp.farkas == event.farkas);
            continue;
         }
         REQUIRE(lp.status == LpStatus::Optimal);
         REQUIRE(same_bits(lp.objective, event.objective));
         REQUIRE(lp.y == event.y);
         REQUIRE(lp.basis == event.basis);
      }
   }
   CHECK(replayed > 40);
}

TEST_CASE("random binary MIPs match enumeration") {
   std::mt19937_64 rng(61);
   int infeasible = 0;
   for( int k = 0; k < 100; ++k ) {
      const MipProblem p = oracle::random_binary_mip(rng, 6, 6);
      const auto expected = oracle::brute_force_mip(p);
      const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
      if( !expected ) {
         ++infeasible;
         REQUIRE(outcome.status == BnbStatus::Infeasible);
         continue;
      }
      REQUIRE(outcome.status == BnbStatus::Optimal);
      REQUIRE(std::abs(outcome.objective - expected->to_double()) <= 1e-6);
   }
   MESSAGE("infeasible instances: ", infeasible);
   CHECK(infeasible > 0);
}

TEST_CASE("leaf accounting") {
   std::mt19937_64 rng(71);
   for( int k = 0; k < 100; ++k ) {
      const MipProblem p = oracle::random_binary_mip(rng, 6, 6);
      const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
      const BnbStatistics& s = outcome.statistics;
      REQUIRE(s.nodes_created == 1 + 2 * s.nodes_branched);
      const int leaves = count_kind(outcome, EventKind::NodeFeasible) + count_kind(outcome, EventKind::NodeInfeasible)
                       + count_kind(outcome, EventKind::NodeDeleted);
      REQUIRE(leaves == s.nodes_created - s.nodes_branched);
      REQUIRE(s.leaves_feasible + s.leaves_infeasible + s.leaves_pruned + s.leaves_deleted == leaves);

      std::set<int> seen;
      for( std::size_t e = 0; e < outcome.events.size(); ++e ) {
         const BnbEvent& event = outcome.events[e];
         if( e > 0 )
            REQUIRE(event.sequence > outcome.events[e - 1].sequence);
         if( event.kind == EventKind::BestSolution )
            continue;
         REQUIRE(seen.insert(event.path.node_id).second);
         if( event.kind == EventKind::NodeDeleted ) {
            REQUIRE(event.y.empty());
            REQUIRE(event.x.empty());
         }
      }
   }
}

TEST_CASE("node limit yields an honest partial outcome") {
   const MipProblem p = fixture("small_tree.mps");
   BnbLimits limits;
   limits.nodes = 1;
   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, limits);
   CHECK(outcome.status == BnbStatus::NodeLimit);
   CHECK(outcome.statistics.nodes_processed == 1);
   CHECK(outcome.events.empty());
}

TEST_CASE("event log round trip") {
   CHECK(decode_float(encode_float(0.1)) == 0.1);
   CHECK(same_bits(decode_float(encode_float(-0.0)), -0.0));
   CHECK(decode_float(encode_float(INFINITY)) == INFINITY);
   CHECK(encode_float(0.5).find('|') != std::string::npos);

   std::mt19937_64 rng(81);
   for( int k = 0; k < 30; ++k ) {
      const MipProblem p = oracle::random_binary_mip(rng, 6, 6);
      const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
      EventLogHeader header;
      header.model_hash = model_hash(p);
      header.model_name = p.name;
      const EventLog log = make_event_log(header, outcome);
      std::ostringstream out;
      write_event_log(out, log);
      std::istringstream in(out.str());
      const EventLog back = read_event_log(in);
      REQUIRE(back.events == log.events);
      REQUIRE(back.header.model_hash == log.header.model_hash);
      REQUIRE(back.summary.status == log.summary.status);
      REQUIRE(same_bits(back.summary.objective, log.summary.objective));
      std::ostringstream again;
      write_event_log(again, back);
      REQUIRE(again.str() == out.str());
   }
}

TEST_CASE("event log rejects damaged input") {
   const MipProblem p = fixture("small_tree.mps");
   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
   EventLogHeader header;
   header.model_hash = model_hash(p);
   std::ostringstream out;
   write_event_log(out, make_event_log(header, outcome));
   const std::string text = out.str();

   SUBCASE("truncated") {
      std::istringstream in(text.substr(0, text.rfind('\n', text.size() - 2) + 1));
      CHECK_THROWS_AS(read_event_log(in), EventLogError);
   }
   SUBCASE("garbage line") {
      std::istringstream in("{not json\n");
      CHECK_THROWS_AS(read_event_log(in), EventLogError);
   }
   SUBCASE("empty") {
      std::istringstream in("");
      CHECK_THROWS_AS(read_event_log(in), EventLogError);
   }
}
