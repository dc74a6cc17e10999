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

#ifndef BNBAUDIT_BNB_HPP_
#define BNBAUDIT_BNB_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnbaudit/lp_types.hpp"
#include "bnbaudit/model.hpp"
#include "bnbaudit/simplex_fp.hpp"

namespace bnbaudit {

enum class BranchDirection : std::uint8_t {
   Up,    ///< x >= bound
   Down,  ///< x <= bound
};

struct BoundChange {
   int variable = 0;
   BranchDirection direction = BranchDirection::Up;
   Rational bound;

   friend bool operator==(const BoundChange&, const BoundChange&) = default;
};

struct NodePath {
   int node_id = 0;
   int parent_id = -1;
   int depth = 0;
   std::vector<BoundChange> changes;

   friend bool operator==(const NodePath&, const NodePath&) = default;
};

/// Local bounds of the node: the model bounds with every change applied in
/// order.
LocalBounds replay_path(const MipProblem& problem, const NodePath& path);

enum class EventKind : std::uint8_t { NodeFeasible, NodeInfeasible, NodeDeleted, BestSolution };

std::string to_string(EventKind kind);
EventKind event_kind_from_string(const std::string& text);

enum class LeafLpStatus : std::uint8_t {
   None,
   Infeasible,        ///< the node LP was declared infeasible
   PrunedAfterSolve,  ///< LP objective reached the primal bound
};

std::string to_string(LeafLpStatus status);
LeafLpStatus leaf_lp_status_from_string(const std::string& text);

struct BnbEvent {
   EventKind kind = EventKind::NodeFeasible;
   std::int64_t sequence = 0;
   NodePath path;
   LeafLpStatus lp_status = LeafLpStatus::None;
   double objective = 0.0;
   std::vector<double> x;
   std::vector<double> y;
   std::vector<double> reduced_plus;
   std::vector<double> reduced_minus;
   std::optional<Basis> basis;
   std::vector<double> farkas;
   double primal_bound = std::numeric_limits<double>::infinity();

   friend bool operator==(const BnbEvent&, const BnbEvent&) = default;
};

struct BnbTolerances {
   double feastol = 1e-6;
   double inttol = 1e-6;
   double zerotol = 1e-9;
   double opttol = 1e-7;

   FpTolerances lp() const { return { feastol, opttol, zerotol }; }
};

struct BnbLimits {
   double time_seconds = std::numeric_limits<double>::infinity();
   std::int64_t nodes = std::numeric_limits<std::int64_t>::max();
   int lp_iterations = 100000;
};

enum class BnbStatus : std::uint8_t { Optimal, Infeasible, TimeLimit, NodeLimit, Unbounded, IterationLimit };

std::string to_string(BnbStatus status);
BnbStatus bnb_status_from_string(const std::string& text);

struct BnbStatistics {
   std::int64_t nodes_created = 0;
   std::int64_t nodes_processed = 0;
   std::int64_t nodes_branched = 0;
   std::int64_t leaves_feasible = 0;
   std::int64_t leaves_infeasible = 0;
   std::int64_t leaves_pruned = 0;
   std::int64_t leaves_deleted = 0;
   std::int64_t lp_iterations = 0;
   double wall_seconds = 0.0;
};

struct BnbOutcome {
   BnbStatus status = BnbStatus::Infeasible;
   std::optional<std::vector<double>> incumbent;
   double objective = std::numeric_limits<double>::infinity();
   std::vector<BnbEvent> events;
   /// Nodes whose LP stopped at the iteration limit; they are neither pruned
   /// nor branched and carry no event.
   std::vector<NodePath> unsolved;
   BnbStatistics statistics;
};

/// Most fractional integer variable, lowest index on ties; -1 when every
/// integer variable is within inttol of an integer.
int choose_branch_variable(std::span<const double> x, const std::vector<bool>& integer, double inttol);

/// Best-first LP-based branch-and-bound without cuts, heuristics or
/// propagation. Every leaf is logged.
BnbOutcome solve_bnb(const MipProblem& problem, const BnbTolerances& tolerances, const BnbLimits& limits);

}  // namespace bnbaudit

#endif
