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

#include "bnbaudit/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "bnbaudit/simplex_fp.hpp"

namespace bnbaudit {

std::optional<SafeDualCertificate> safe_dual_bound(const MipProblem& problem, const LocalBounds& bounds,
                                                   std::span<const Rational> y, std::span<const Rational> r_plus,
                                                   std::span<const Rational> r_minus) {
   const auto nonnegative = [](std::span<const Rational> v) {
      return std::all_of(v.begin(), v.end(), [](const Rational& value) { return value.sign() >= 0; });
   };
   if( static_cast<int>(y.size()) != problem.num_rows() || static_cast<int>(r_plus.size()) != problem.num_vars()
       || static_cast<int>(r_minus.size()) != problem.num_vars() )
      return std::nullopt;
   if( !nonnegative(y) || !nonnegative(r_plus) || !nonnegative(r_minus) )
      return std::nullopt;

   SafeDualCertificate cert;
   cert.y.assign(y.begin(), y.end());
   cert.r_plus.assign(r_plus.begin(), r_plus.end());
   cert.r_minus.assign(r_minus.begin(), r_minus.end());
   cert.residual = transpose_times(problem, y);
   for( int j = 0; j < problem.num_vars(); ++j ) {
      Rational& eps = cert.residual[j];
      eps = problem.objective[j] - eps - r_plus[j] + r_minus[j];
      if( eps.sign() > 0 )
         cert.r_plus[j] += eps;
      else if( eps.sign() < 0 )
         cert.r_minus[j] -= eps;
   }
   cert.safe_bound = dual_objective(problem, bounds, cert.y, cert.r_plus, cert.r_minus);
   return cert;
}

namespace {

std::optional<std::vector<Rational>> clamp_to_rational(std::span<const double> values, double zerotol) {
   std::vector<Rational> result;
   result.reserve(values.size());
   for( double value : values ) {
      if( !std::isfinite(value) || value < -zerotol )
         return std::nullopt;
      result.push_back(value < 0.0 ? Rational(0) : Rational::from_double(value));
   }
   return result;
}

std::optional<std::vector<Rational>> reconstruct_nonnegative(std::span<const double> values,
                                                             std::uint64_t max_denominator) {
   std::vector<Rational> result;
   result.reserve(values.size());
   for( double value : values ) {
      if( !std::isfinite(value) )
         return std::nullopt;
      Rational r = reconstruct_rational(value, max_denominator);
      result.push_back(r.sign() < 0 ? Rational(0) : std::move(r));
   }
   return result;
}

}  // namespace

std::optional<SafeDualCertificate> safe_dual_bound(const MipProblem& problem, const LocalBounds& bounds,
                                                   std::span<const double> y, std::span<const double> r_plus,
                                                   std::span<const double> r_minus, double zerotol) {
   const auto y_exact = clamp_to_rational(y, zerotol);
   const auto plus_exact = clamp_to_rational(r_plus, zerotol);
   const auto minus_exact = clamp_to_rational(r_minus, zerotol);
   if( !y_exact || !plus_exact || !minus_exact )
      return std::nullopt;
   return safe_dual_bound(problem, bounds, *y_exact, *plus_exact, *minus_exact);
}

std::optional<ExtendedRational> validate_farkas_exact(const MipProblem& problem, const LocalBounds& bounds,
                                                      std::span<const Rational> ray) {
   if( bounds.empty_box() )
      return ExtendedRational::plus_infinity();
   if( static_cast<int>(ray.size()) != problem.num_rows() )
      return std::nullopt;
   for( const Rational& value : ray ) {
      if( value.sign() < 0 )
         return std::nullopt;
   }
   const std::vector<Rational> z = transpose_times(problem, ray);
   Rational box_max;
   for( int j = 0; j < problem.num_vars(); ++j ) {
      if( z[j].sign() > 0 ) {
         if( !bounds.upper[j].is_finite() )
            return std::nullopt;
         box_max += z[j] * bounds.upper[j].finite();
      }
      else if( z[j].sign() < 0 ) {
         if( !bounds.lower[j].is_finite() )
            return std::nullopt;
         box_max += z[j] * bounds.lower[j].finite();
      }
   }
   Rational activity;
   for( int i = 0; i < problem.num_rows(); ++i ) {
      if( !ray[i].is_zero() )
         activity += ray[i] * problem.rhs[i];
   }
   Rational margin = activity - box_max;
   if( margin.sign() <= 0 )
      return std::nullopt;
   return ExtendedRational(std::move(margin));
}

std::optional<ExtendedRational> validate_farkas_exact(const MipProblem& problem, const LocalBounds& bounds,
                                                      std::span<const double> ray, double zerotol) {
   if( bounds.empty_box() )
      return ExtendedRational::plus_infinity();
   const auto exact = clamp_to_rational(ray, zerotol);
   if( !exact )
      return std::nullopt;
   return validate_farkas_exact(problem, bounds, *exact);
}

std::string to_string(VerdictClass verdict) {
   switch( verdict ) {
   case VerdictClass::Verified:
      return "Verified";
   case VerdictClass::WeakSolutionError:
      return "WeakSolutionError";
   case VerdictClass::StrongSolutionError:
      return "StrongSolutionError";
   case VerdictClass::WeakBoundError:
      return "WeakBoundError";
   case VerdictClass::StrongBoundError:
      return "StrongBoundError";
   case VerdictClass::WeakGapError:
      return "WeakGapError";
   case VerdictClass::StrongGapError:
      return "StrongGapError";
   case VerdictClass::InfeasibilityError:
      return "InfeasibilityError";
   case VerdictClass::Inconclusive:
      return "Inconclusive";
   }
   return "unknown";
}

VerdictClass verdict_class_from_string(const std::string& text) {
   for( int k = 0; k <= static_cast<int>(VerdictClass::Inconclusive); ++k ) {
      const auto verdict = static_cast<VerdictClass>(k);
      if( to_string(verdict) == text )
         return verdict;
   }
   throw std::invalid_argument("unknown verdict '" + text + "'");
}

bool is_error(VerdictClass verdict) {
   return verdict != VerdictClass::Verified && verdict != VerdictClass::Inconclusive;
}

std::string to_string(Technique technique) {
   switch( technique ) {
   case Technique::SafeBounding:
      return "SafeBounding";
   case Technique::Reconstruction:
      return "Reconstruction";
   case Technique::Factorization:
      return "Factorization";
   case Technique::ExactLP:
      return "ExactLP";
   }
   return "unknown";
}

Technique technique_from_string(const std::string& text) {
   for( Technique technique :
        { Technique::SafeBounding, Technique::Reconstruction, Technique::Factorization, Technique::ExactLP } ) {
      if( to_string(technique) == text )
         return technique;
   }
   throw std::invalid_argument("unknown technique '" + text + "'");
}

std::string to_string(VerifyLevel level) {
   switch( level ) {
   case VerifyLevel::Safe:
      return "safe";
   case VerifyLevel::Reconstruct:
      return "reconstruct";
   case VerifyLevel::Factorize:
      return "factorize";
   case VerifyLevel::Exact:
      return "exact";
   }
   return "unknown";
}

VerifyLevel verify_level_from_string(const std::string& text) {
   for( VerifyLevel level : { VerifyLevel::Safe, VerifyLevel::Reconstruct, VerifyLevel::Factorize, VerifyLevel::Exact } ) {
      if( to_string(level) == text )
         return level;
   }
   throw std::invalid_argument("unknown verify level '" + text + "'");
}

namespace {

class LeafCheck {
public:
   LeafCheck(const MipProblem& problem, const BnbEvent& event, const VerifyOptions& options)
      : problem_(problem), event_(event), options_(options), bounds_(replay_path(problem, event.path)) {
      verdict_.sequence = event.sequence;
      verdict_.node_id = event.path.node_id;
      verdict_.kind = event.kind;
   }

   LeafVerdict run() {
      switch( event_.kind ) {
      case EventKind::NodeFeasible:
         check_feasible();
         break;
      case EventKind::NodeInfeasible:
         if( event_.lp_status == LeafLpStatus::Infeasible )
            check_infeasible(event_.farkas);
         else
            check_pruned(event_.y, event_.reduced_plus, event_.reduced_minus, event_.basis);
         break;
      case EventKind::NodeDeleted:
         check_deleted();
         break;
      case EventKind::BestSolution:
         throw std::invalid_argument("BestSolution is not a leaf event");
      }
      return verdict_;
   }

private:
   bool allowed(VerifyLevel level) const {
      if( level == VerifyLevel::Exact )
         return options_.level_cap == VerifyLevel::Exact;
      return !options_.exact_only && level <= options_.level_cap;
   }

   const ExactLpResult& exact_lp() {
      if( !exact_ )
         exact_ = solve_lp_exact(problem_, bounds_);
      return *exact_;
   }

   void decide(VerdictClass verdict, Technique technique, std::optional<ExtendedRational> dual_bound = std::nullopt) {
      verdict_.verdict = verdict;
      verdict_.technique = technique;
      verdict_.dual_bound = std::move(dual_bound);
   }

   void inconclusive() {
      verdict_.verdict = VerdictClass::Inconclusive;
      verdict_.technique.reset();
      verdict_.dual_bound.reset();
   }

   /// Tries safe bounding and reconstruction against `target`.
   bool dual_check(std::span<const double> y, std::span<const double> r_plus, std::span<const double> r_minus,
                   const ExtendedRational& target) {
      if( y.empty() && problem_.num_rows() > 0 )
         return false;
      if( allowed(VerifyLevel::Safe) ) {
         const auto cert = safe_dual_bound(problem_, bounds_, y, r_plus, r_minus, options_.tolerances.zerotol);
         if( cert && cert->safe_bound >= target ) {
            decide(VerdictClass::Verified, Technique::SafeBounding);
            return true;
         }
      }
      if( allowed(VerifyLevel::Reconstruct) ) {
         const auto y_rec = reconstruct_nonnegative(y, options_.max_denominator);
         const auto plus_rec = reconstruct_nonnegative(r_plus, options_.max_denominator);
         const auto minus_rec = reconstruct_nonnegative(r_minus, options_.max_denominator);
         if( y_rec && plus_rec && minus_rec ) {
            const auto cert = safe_dual_bound(problem_, bounds_, *y_rec, *plus_rec, *minus_rec);
            if( cert && cert->safe_bound >= target ) {
               decide(VerdictClass::Verified, Technique::Reconstruction);
               return true;
            }
         }
      }
      return false;
   }

   bool farkas_check(std::span<const double> ray) {
      if( allowed(VerifyLevel::Safe) && validate_farkas_exact(problem_, bounds_, ray, options_.tolerances.zerotol) ) {
         decide(VerdictClass::Verified, Technique::SafeBounding);
         return true;
      }
      if( allowed(VerifyLevel::Reconstruct) ) {
         const auto ray_rec = reconstruct_nonnegative(ray, options_.max_denominator);
         if( ray_rec && validate_farkas_exact(problem_, bounds_, *ray_rec) ) {
            decide(VerdictClass::Verified, Technique::Reconstruction);
            return true;
         }
      }
      return false;
   }

   void check_feasible() {
      std::vector<Rational> values(static_cast<std::size_t>(problem_.num_vars()));
      for( int j = 0; j < problem_.num_vars(); ++j ) {
         if( problem_.integer[j] && j < static_cast<int>(event_.x.size()) && std::isfinite(event_.x[j]) )
            values[j] = Rational::from_double(std::round(event_.x[j]));
      }
      const Completion completion = complete_solution(problem_, bounds_, values);

      if( !completion.feasible ) {
         if( allowed(VerifyLevel::Factorize) && event_.basis ) {
            const FactorizationResult fact = factorize_basis_exact(problem_, bounds_, *event_.basis);
            if( fact.outcome == FactorizationOutcome::Optimal || fact.primal_feasible ) {
               const ExtendedRational value = fact.outcome == FactorizationOutcome::Optimal
                                                 ? fact.bound
                                                 : (allowed(VerifyLevel::Exact) ? exact_lp().objective
                                                                                : ExtendedRational::minus_infinity());
               decide(VerdictClass::StrongSolutionError, Technique::Factorization, value);
               return;
            }
         }
         if( !allowed(VerifyLevel::Exact) ) {
            inconclusive();
            return;
         }
         const ExactLpResult& lp = exact_lp();
         if( lp.status == ExactStatus::Infeasible )
            decide(VerdictClass::WeakSolutionError, Technique::ExactLP, ExtendedRational::plus_infinity());
         else
            decide(VerdictClass::StrongSolutionError, Technique::ExactLP, lp.objective);
         return;
      }

      verdict_.completion_objective = completion.objective;
      const ExtendedRational& target = completion.objective;
      if( dual_check(event_.y, event_.reduced_plus, event_.reduced_minus, target) )
         return;
      if( allowed(VerifyLevel::Factorize) && event_.basis ) {
         const FactorizationResult fact = factorize_basis_exact(problem_, bounds_, *event_.basis);
         if( fact.outcome == FactorizationOutcome::Optimal ) {
            if( fact.bound == target ) {
               decide(VerdictClass::Verified, Technique::Factorization);
               return;
            }
            if( fact.bound < target ) {
               decide(VerdictClass::StrongGapError, Technique::Factorization, fact.bound);
               return;
            }
         }
         else if( fact.outcome == FactorizationOutcome::DualBoundOnly && fact.bound >= target ) {
            decide(VerdictClass::Verified, Technique::Factorization);
            return;
         }
      }
      if( !allowed(VerifyLevel::Exact) ) {
         inconclusive();
         return;
      }
      const ExactLpResult& lp = exact_lp();
      if( lp.status == ExactStatus::Infeasible )
         throw std::logic_error("exact completion exists but the node LP is infeasible");
      if( lp.objective >= target )
         decide(VerdictClass::Verified, Technique::ExactLP);
      else
         decide(VerdictClass::StrongGapError, Technique::ExactLP, lp.objective);
   }

   void check_infeasible(std::span<const double> ray) {
      if( farkas_check(ray) )
         return;
      if( !allowed(VerifyLevel::Exact) ) {
         inconclusive();
         return;
      }
      const ExactLpResult& lp = exact_lp();
      if( lp.status == ExactStatus::Infeasible )
         decide(VerdictClass::Verified, Technique::ExactLP);
      else
         decide(VerdictClass::InfeasibilityError, Technique::ExactLP, lp.objective);
   }

   void exact_bound_check(const ExtendedRational& primal_bound) {
      if( !allowed(VerifyLevel::Exact) ) {
         inconclusive();
         return;
      }
      const ExactLpResult& lp = exact_lp();
      if( lp.status == ExactStatus::Infeasible || lp.objective >= primal_bound )
         decide(VerdictClass::Verified, Technique::ExactLP);
      else
         decide(VerdictClass::StrongBoundError, Technique::ExactLP, lp.objective);
   }

   void check_pruned(std::span<const double> y, std::span<const double> r_plus, std::span<const double> r_minus,
                     const std::optional<Basis>& basis) {
      const ExtendedRational primal_bound = ExtendedRational::from_double(event_.primal_bound);
      if( dual_check(y, r_plus, r_minus, primal_bound) )
         return;
      if( allowed(VerifyLevel::Factorize) && basis ) {
         const FactorizationResult fact = factorize_basis_exact(problem_, bounds_, *basis);
         if( fact.outcome == FactorizationOutcome::Optimal ) {
            if( fact.bound >= primal_bound )
               decide(VerdictClass::Verified, Technique::Factorization);
            else
               decide(VerdictClass::StrongBoundError, Technique::Factorization, fact.bound);
            return;
         }
         if( fact.outcome == FactorizationOutcome::DualBoundOnly && fact.bound >= primal_bound ) {
            decide(VerdictClass::Verified, Technique::Factorization);
            return;
         }
      }
      exact_bound_check(primal_bound);
   }

   void check_deleted() {
      if( options_.exact_only ) {
         exact_bound_check(ExtendedRational::from_double(event_.primal_bound));
         return;
      }
      const FpLpResult lp = solve_lp_fp(problem_, bounds_, options_.tolerances.lp(), options_.lp_iteration_limit);
      if( lp.status == LpStatus::Infeasible ) {
         if( farkas_check(lp.farkas) )
            return;
         exact_bound_check(ExtendedRational::from_double(event_.primal_bound));
         return;
      }
      if( lp.status == LpStatus::Optimal ) {
         check_pruned(lp.y, lp.reduced_plus, lp.reduced_minus, lp.basis);
         return;
      }
      exact_bound_check(ExtendedRational::from_double(event_.primal_bound));
   }

   const MipProblem& problem_;
   const BnbEvent& event_;
   const VerifyOptions& options_;
   LocalBounds bounds_;
   std::optional<ExactLpResult> exact_;
   LeafVerdict verdict_;
};

}  // namespace

LeafVerdict verify_leaf(const MipProblem& problem, const BnbEvent& event, const VerifyOptions& options) {
   return LeafCheck(problem, event, options).run();
}

std::vector<TimelineEntry> exact_timeline(const std::vector<LeafVerdict>& verdicts) {
   std::vector<TimelineEntry> timeline;
   for( const LeafVerdict& verdict : verdicts ) {
      if( verdict.kind == EventKind::NodeFeasible && verdict.completion_objective )
         timeline.push_back(TimelineEntry{ verdict.sequence, *verdict.completion_objective });
   }
   std::sort(timeline.begin(), timeline.end(),
             [](const TimelineEntry& a, const TimelineEntry& b) { return a.sequence < b.sequence; });
   return timeline;
}

void classify_hindsight(std::vector<LeafVerdict>& verdicts, const std::vector<TimelineEntry>& timeline) {
   std::optional<ExtendedRational> best;
   for( const TimelineEntry& entry : timeline ) {
      if( !best || entry.objective < *best )
         best = entry.objective;
   }
   for( LeafVerdict& verdict : verdicts ) {
      if( !verdict.dual_bound )
         continue;
      const ExtendedRational& payload = *verdict.dual_bound;
      if( verdict.verdict == VerdictClass::WeakBoundError || verdict.verdict == VerdictClass::StrongBoundError ) {
         const bool justified = std::any_of(timeline.begin(), timeline.end(), [&](const TimelineEntry& entry) {
            return entry.sequence > verdict.sequence && entry.objective <= payload;
         });
         verdict.verdict = justified ? VerdictClass::WeakBoundError : VerdictClass::StrongBoundError;
      }
      else if( verdict.verdict == VerdictClass::WeakGapError || verdict.verdict == VerdictClass::StrongGapError ) {
         const bool justified = best && *best <= payload;
         verdict.verdict = justified ? VerdictClass::WeakGapError : VerdictClass::StrongGapError;
      }
   }
}

BoundInterval global_bound_interval(const std::vector<LeafVerdict>& verdicts, double z_star, bool search_complete) {
   BoundInterval interval{ ExtendedRational::from_double(z_star), ExtendedRational::plus_infinity() };
   for( const LeafVerdict& verdict : verdicts ) {
      if( verdict.completion_objective && *verdict.completion_objective < interval.upper )
         interval.upper = *verdict.completion_objective;
      std::optional<ExtendedRational> candidate;
      if( verdict.verdict == VerdictClass::Inconclusive )
         candidate = ExtendedRational::minus_infinity();
      else if( is_error(verdict.verdict) )
         candidate = verdict.dual_bound.value_or(ExtendedRational::minus_infinity());
      else if( verdict.completion_objective )
         candidate = verdict.completion_objective;
      if( candidate && *candidate < interval.lower )
         interval.lower = *candidate;
   }
   if( !search_complete )
      interval.lower = ExtendedRational::minus_infinity();
   return interval;
}

std::int64_t VerdictCounts::errors() const {
   return solution_weak + solution_strong + bound_weak + bound_strong + gap_weak + gap_strong + infeasibility;
}

std::int64_t VerdictCounts::strong_errors() const {
   return solution_strong + bound_strong + gap_strong + infeasibility;
}

bool VerificationReport::fully_verified() const {
   return counts.verified == counts.leaves && unsolved_nodes == 0;
}

namespace {

std::vector<const BnbEvent*> leaf_events(const EventLog& log) {
   std::vector<const BnbEvent*> leaves;
   for( const BnbEvent& event : log.events ) {
      if( event.kind != EventKind::BestSolution )
         leaves.push_back(&event);
   }
   return leaves;
}

VerificationReport finalize(const EventLog& log, std::vector<LeafVerdict> verdicts) {
   VerificationReport report;
   report.model_name = log.header.model_name;
   report.model_hash = log.header.model_hash;
   report.solver_status = log.summary.status;
   report.z_star = log.summary.objective;
   report.unsolved_nodes = static_cast<std::int64_t>(log.summary.unsolved.size());

   classify_hindsight(verdicts, exact_timeline(verdicts));
   const bool complete = log.summary.status == BnbStatus::Optimal || log.summary.status == BnbStatus::Infeasible;
   report.interval = global_bound_interval(verdicts, log.summary.objective, complete);

   VerdictCounts& counts = report.counts;
   for( const LeafVerdict& verdict : verdicts ) {
      ++counts.leaves;
      if( verdict.technique )
         ++report.techniques[static_cast<std::size_t>(*verdict.technique)];
      switch( verdict.verdict ) {
      case VerdictClass::Verified:
         ++counts.verified;
         break;
      case VerdictClass::WeakSolutionError:
         ++counts.solution_weak;
         break;
      case VerdictClass::StrongSolutionError:
         ++counts.solution_strong;
         break;
      case VerdictClass::WeakBoundError:
         ++counts.bound_weak;
         break;
      case VerdictClass::StrongBoundError:
         ++counts.bound_strong;
         break;
      case VerdictClass::WeakGapError:
         ++counts.gap_weak;
         break;
      case VerdictClass::StrongGapError:
         ++counts.gap_strong;
         break;
      case VerdictClass::InfeasibilityError:
         ++counts.infeasibility;
         break;
      case VerdictClass::Inconclusive:
         ++counts.inconclusive;
         break;
      }
   }
   report.verdicts = std::move(verdicts);
   return report;
}

}  // namespace

VerificationReport verify_events_serial(const MipProblem& problem, const EventLog& log, const VerifyOptions& options) {
   const std::vector<const BnbEvent*> leaves = leaf_events(log);
   std::vector<LeafVerdict> verdicts;
   verdicts.reserve(leaves.size());
   for( const BnbEvent* event : leaves )
      verdicts.push_back(verify_leaf(problem, *event, options));
   return finalize(log, std::move(verdicts));
}

VerificationReport verify_events_parallel(const MipProblem& problem, const EventLog& log, const VerifyOptions& options,
                                          int jobs) {
   const std::vector<const BnbEvent*> leaves = leaf_events(log);
   const auto count = static_cast<std::int64_t>(leaves.size());
   std::vector<LeafVerdict> verdicts(leaves.size());
   std::exception_ptr failure;
   const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
   for( std::int64_t k = 0; k < count; ++k ) {
      try {
         verdicts[k] = verify_leaf(problem, *leaves[k], options);
      }
      catch( ... ) {
#pragma omp critical(bnbaudit_verify_failure)
         if( !failure )
            failure = std::current_exception();
      }
   }
   if( failure )
      std::rethrow_exception(failure);
   return finalize(log, std::move(verdicts));
}

}  // namespace bnbaudit
