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

#include "bnbaudit/bnb.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <stdexcept>

namespace bnbaudit {

LocalBounds replay_path(const MipProblem& problem, const NodePath& path) {
   LocalBounds bounds = LocalBounds::of(problem);
   for( const BoundChange& change : path.changes ) {
      if( change.variable < 0 || change.variable >= problem.num_vars() )
         throw std::out_of_range("bound change on unknown variable");
      if( change.direction == BranchDirection::Up ) {
         if( bounds.lower[change.variable] < ExtendedRational(change.bound) )
            bounds.lower[change.variable] = change.bound;
      }
      else if( bounds.upper[change.variable] > ExtendedRational(change.bound) )
         bounds.upper[change.variable] = change.bound;
   }
   return bounds;
}

std::string to_string(EventKind kind) {
   switch( kind ) {
   case EventKind::NodeFeasible:
      return "NodeFeasible";
   case EventKind::NodeInfeasible:
      return "NodeInfeasible";
   case EventKind::NodeDeleted:
      return "NodeDeleted";
   case EventKind::BestSolution:
      return "BestSolution";
   }
   return "unknown";
}

EventKind event_kind_from_string(const std::string& text) {
   for( EventKind kind :
        { EventKind::NodeFeasible, EventKind::NodeInfeasible, EventKind::NodeDeleted, EventKind::BestSolution } ) {
      if( to_string(kind) == text )
         return kind;
   }
   throw std::invalid_argument("unknown event kind '" + text + "'");
}

std::string to_string(LeafLpStatus status) {
   switch( status ) {
   case LeafLpStatus::None:
      return "none";
   case LeafLpStatus::Infeasible:
      return "infeasible";
   case LeafLpStatus::PrunedAfterSolve:
      return "pruned-after-solve";
   }
   return "unknown";
}

LeafLpStatus leaf_lp_status_from_string(const std::string& text) {
   for( LeafLpStatus status : { LeafLpStatus::None, LeafLpStatus::Infeasible, LeafLpStatus::PrunedAfterSolve } ) {
      if( to_string(status) == text )
         return status;
   }
   throw std::invalid_argument("unknown leaf LP status '" + text + "'");
}

std::string to_string(BnbStatus status) {
   switch( status ) {
   case BnbStatus::Optimal:
      return "optimal";
   case BnbStatus::Infeasible:
      return "infeasible";
   case BnbStatus::TimeLimit:
      return "time-limit";
   case BnbStatus::NodeLimit:
      return "node-limit";
   case BnbStatus::Unbounded:
      return "unbounded";
   case BnbStatus::IterationLimit:
      return "iteration-limit";
   }
   return "unknown";
}

BnbStatus bnb_status_from_string(const std::string& text) {
   for( BnbStatus status : { BnbStatus::Optimal, BnbStatus::Infeasible, BnbStatus::TimeLimit, BnbStatus::NodeLimit,
                             BnbStatus::Unbounded, BnbStatus::IterationLimit } ) {
      if( to_string(status) == text )
         return status;
   }
   throw std::invalid_argument("unknown solver status '" + text + "'");
}

int choose_branch_variable(std::span<const double> x, const std::vector<bool>& integer, double inttol) {
   int best = -1;
   double best_fractionality = inttol;
   for( std::size_t j = 0; j < x.size(); ++j ) {
      if( !integer[j] )
         continue;
      const double fractionality = std::min(x[j] - std::floor(x[j]), std::ceil(x[j]) - x[j]);
      if( fractionality > best_fractionality ) {
         best = static_cast<int>(j);
         best_fractionality = fractionality;
      }
   }
   return best;
}

namespace {

struct OpenNode {
   double lower_bound;
   NodePath path;
};

struct NodeOrder {
   bool operator()(const OpenNode& a, const OpenNode& b) const {
      if( a.lower_bound != b.lower_bound )
         return a.lower_bound < b.lower_bound;
      if( a.path.depth != b.path.depth )
         return a.path.depth > b.path.depth;
      return a.path.node_id < b.path.node_id;
   }
};

double clamp_to_bounds(double value, const LocalBounds& bounds, int j) {
   if( bounds.lower[j].is_finite() )
      value = std::max(value, bounds.lower[j].to_double());
   if( bounds.upper[j].is_finite() )
      value = std::min(value, bounds.upper[j].to_double());
   return value;
}

}  // namespace

BnbOutcome solve_bnb(const MipProblem& problem, const BnbTolerances& tolerances, const BnbLimits& limits) {
   const auto start = std::chrono::steady_clock::now();
   const FpLpData data(problem);
   const FpTolerances lp_tolerances = tolerances.lp();

   BnbOutcome outcome;
   BnbStatistics& stats = outcome.statistics;
   double primal_bound = std::numeric_limits<double>::infinity();
   std::int64_t sequence = 0;
   int next_id = 0;

   std::set<OpenNode, NodeOrder> open;
   open.insert(OpenNode{ -std::numeric_limits<double>::infinity(), NodePath{ next_id++, -1, 0, {} } });
   stats.nodes_created = 1;

   const auto emit = [&](BnbEvent event) {
      event.sequence = sequence++;
      event.primal_bound = primal_bound;
      outcome.events.push_back(std::move(event));
   };

   const auto delete_dominated = [&]() {
      for( auto it = open.begin(); it != open.end(); ) {
         if( it->lower_bound >= primal_bound - tolerances.zerotol ) {
            BnbEvent event;
            event.kind = EventKind::NodeDeleted;
            event.path = it->path;
            emit(std::move(event));
            ++stats.leaves_deleted;
            it = open.erase(it);
         }
         else
            ++it;
      }
   };

   bool stopped = false;
   while( !open.empty() ) {
      if( stats.nodes_processed >= limits.nodes ) {
         outcome.status = BnbStatus::NodeLimit;
         stopped = true;
         break;
      }
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      if( elapsed.count() >= limits.time_seconds ) {
         outcome.status = BnbStatus::TimeLimit;
         stopped = true;
         break;
      }

      OpenNode node = *open.begin();
      open.erase(open.begin());
      ++stats.nodes_processed;

      const LocalBounds bounds = replay_path(problem, node.path);
      FpLpResult lp = solve_lp_fp(data, bounds, lp_tolerances, limits.lp_iterations);
      stats.lp_iterations += lp.iterations;

      if( lp.status == LpStatus::Unbounded && node.path.node_id == 0 ) {
         outcome.status = BnbStatus::Unbounded;
         outcome.objective = -std::numeric_limits<double>::infinity();
         stopped = true;
         break;
      }
      if( lp.status == LpStatus::IterationLimit || lp.status == LpStatus::Unbounded ) {
         outcome.unsolved.push_back(std::move(node.path));
         continue;
      }

      if( lp.status == LpStatus::Infeasible ) {
         BnbEvent event;
         event.kind = EventKind::NodeInfeasible;
         event.lp_status = LeafLpStatus::Infeasible;
         event.path = std::move(node.path);
         event.farkas = std::move(lp.farkas);
         emit(std::move(event));
         ++stats.leaves_infeasible;
         continue;
      }

      if( lp.objective >= primal_bound - tolerances.zerotol ) {
         BnbEvent event;
         event.kind = EventKind::NodeInfeasible;
         event.lp_status = LeafLpStatus::PrunedAfterSolve;
         event.path = std::move(node.path);
         event.objective = lp.objective;
         event.x = std::move(lp.x);
         event.y = std::move(lp.y);
         event.reduced_plus = std::move(lp.reduced_plus);
         event.reduced_minus = std::move(lp.reduced_minus);
         event.basis = std::move(lp.basis);
         emit(std::move(event));
         ++stats.leaves_pruned;
         continue;
      }

      std::vector<double> clamped(lp.x.size());
      for( int j = 0; j < problem.num_vars(); ++j )
         clamped[j] = clamp_to_bounds(lp.x[j], bounds, j);
      const int branch = choose_branch_variable(clamped, problem.integer, tolerances.inttol);

      if( branch < 0 ) {
         primal_bound = lp.objective;
         outcome.incumbent = lp.x;
         outcome.objective = lp.objective;

         BnbEvent best;
         best.kind = EventKind::BestSolution;
         best.path = node.path;
         best.objective = lp.objective;
         best.x = lp.x;
         emit(std::move(best));

         BnbEvent leaf;
         leaf.kind = EventKind::NodeFeasible;
         leaf.path = std::move(node.path);
         leaf.objective = lp.objective;
         leaf.x = std::move(lp.x);
         leaf.y = std::move(lp.y);
         leaf.reduced_plus = std::move(lp.reduced_plus);
         leaf.reduced_minus = std::move(lp.reduced_minus);
         leaf.basis = std::move(lp.basis);
         emit(std::move(leaf));
         ++stats.leaves_feasible;

         delete_dominated();
         continue;
      }

      ++stats.nodes_branched;
      const Rational value = Rational::from_double(clamped[branch]);
      for( BranchDirection direction : { BranchDirection::Up, BranchDirection::Down } ) {
         NodePath child;
         child.node_id = next_id++;
         child.parent_id = node.path.node_id;
         child.depth = node.path.depth + 1;
         child.changes = node.path.changes;
         child.changes.push_back(
            BoundChange{ branch, direction, direction == BranchDirection::Up ? value.ceil() : value.floor() });
         open.insert(OpenNode{ lp.objective, std::move(child) });
         ++stats.nodes_created;
      }
   }

   if( !stopped ) {
      if( !outcome.unsolved.empty() )
         outcome.status = BnbStatus::IterationLimit;
      else
         outcome.status = outcome.incumbent ? BnbStatus::Optimal : BnbStatus::Infeasible;
   }
   const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
   stats.wall_seconds = elapsed.count();
   return outcome;
}

}  // namespace bnbaudit
