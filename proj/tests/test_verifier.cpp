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

#include <random>

#include "doctest.h"

#include "bnbaudit/bnb.hpp"
#include "bnbaudit/event_log.hpp"
#include "bnbaudit/simplex_exact.hpp"
#include "bnbaudit/verifier.hpp"
#include "oracles/oracles.hpp"

using namespace bnbaudit;

namespace {

const ExtendedRational kInf = ExtendedRational::plus_infinity();
const ExtendedRational kMinusInf = ExtendedRational::minus_infinity();
const Rational kTenMillionth(1, 10000000);

MipProblem fixture(const std::string& name) {
   return parse_mps_file(std::string(BNBAUDIT_FIXTURE_DIR) + "/" + name);
}

MipProblem minus_x(ExtendedRational upper) {
   MipProblem p;
   p.add_variable("x", -1, 0, std::move(upper), false);
   p.reset_origins();
   return p;
}

void check_certificate(const MipProblem& p, const SafeDualCertificate& cert) {
   const std::vector<Rational> aty = transpose_times(p, cert.y);
   for( int i = 0; i < p.num_rows(); ++i )
      REQUIRE(cert.y[i].sign() >= 0);
   for( int j = 0; j < p.num_vars(); ++j ) {
      REQUIRE(cert.r_plus[j].sign() >= 0);
      REQUIRE(cert.r_minus[j].sign() >= 0);
      REQUIRE(aty[j] + cert.r_plus[j] - cert.r_minus[j] == p.objective[j]);
   }
}

EventLog log_for(const MipProblem& p, const BnbOutcome& outcome) {
   EventLogHeader header;
   header.model_hash = model_hash(p);
   header.model_name = p.name;
   return make_event_log(header, outcome);
}

LeafVerdict verdict_with(VerdictClass verdict, std::int64_t sequence, ExtendedRational payload) {
   LeafVerdict v;
   v.sequence = sequence;
   v.kind = EventKind::NodeInfeasible;
   v.verdict = verdict;
   v.dual_bound = std::move(payload);
   return v;
}

LeafVerdict feasible_leaf(std::int64_t sequence, ExtendedRational objective) {
   LeafVerdict v;
   v.sequence = sequence;
   v.kind = EventKind::NodeFeasible;
   v.completion_objective = std::move(objective);
   return v;
}

}  // namespace

TEST_CASE("safe_dual_bound examples") {
   const MipProblem p = minus_x(1);
   const LocalBounds bounds = LocalBounds::of(p);
   const std::vector<Rational> none;

   SUBCASE("exact duals") {
      const std::vector<Rational> zero = { 0 };
      const std::vector<Rational> one = { 1 };
      const auto cert = safe_dual_bound(p, bounds, none, zero, one);
      REQUIRE(cert.has_value());
      CHECK(cert->residual == std::vector<Rational>{ 0 });
      CHECK(cert->safe_bound == ExtendedRational(-1));
      check_certificate(p, *cert);
   }
   SUBCASE("residual of 1e-7") {
      const std::vector<Rational> zero = { 0 };
      const std::vector<Rational> perturbed = { Rational(1) + kTenMillionth };
      const auto cert = safe_dual_bound(p, bounds, none, zero, perturbed);
      REQUIRE(cert.has_value());
      CHECK(cert->residual == std::vector<Rational>{ kTenMillionth });
      CHECK(cert->r_plus == std::vector<Rational>{ kTenMillionth });
      CHECK(cert->r_minus == std::vector<Rational>{ Rational(1) + kTenMillionth });
      CHECK(cert->safe_bound == ExtendedRational(Rational(-1) - kTenMillionth));
      check_certificate(p, *cert);

      // the float entry point sees the binary64 value of 1 + 1e-7
      const double r_minus = 1.0 + 1e-7;
      const auto from_float = safe_dual_bound(p, bounds, std::vector<double>{}, std::vector<double>{ 0.0 },
                                              std::vector<double>{ r_minus });
      REQUIRE(from_float.has_value());
      const Rational excess = Rational::from_double(r_minus) - Rational(1);
      CHECK(from_float->residual == std::vector<Rational>{ excess });
      CHECK(from_float->safe_bound == ExtendedRational(Rational(-1) - excess));
   }
   SUBCASE("infinite upper bound") {
      const MipProblem q = minus_x(kInf);
      const auto cert = safe_dual_bound(q, LocalBounds::of(q), std::vector<double>{}, std::vector<double>{ 0.0 },
                                        std::vector<double>{ 0.5 });
      REQUIRE(cert.has_value());
      CHECK(cert->safe_bound == kMinusInf);
   }
   SUBCASE("negative duals") {
      MipProblem q = minus_x(1);
      q.add_row("r", { { 0, -1 } }, -1);
      const LocalBounds qb = LocalBounds::of(q);
      CHECK_FALSE(safe_dual_bound(q, qb, std::vector<double>{ -1e-3 }, std::vector<double>{ 0.0 },
                                  std::vector<double>{ 0.0 })
                     .has_value());
      const auto clamped = safe_dual_bound(q, qb, std::vector<double>{ -1e-12 }, std::vector<double>{ 0.0 },
                                           std::vector<double>{ 1.0 });
      REQUIRE(clamped.has_value());
      CHECK(clamped->y == std::vector<Rational>{ 0 });
      CHECK_FALSE(safe_dual_bound(q, qb, std::vector<double>{ 0.0 }, std::vector<double>{ -1.0 },
                                  std::vector<double>{ 0.0 })
                     .has_value());
   }
}

TEST_CASE("validate_farkas_exact examples") {
   MipProblem p;
   p.add_variable("x", 0, 0, 1, false);
   p.add_row("lo", { { 0, 1 } }, 1);
   p.add_row("hi", { { 0, -1 } }, 0);
   p.reset_origins();
   const LocalBounds bounds = LocalBounds::of(p);
   // oracle: no point of [0, 1] satisfies both rows, checked on a grid
   for( int k = 0; k <= 8; ++k ) {
      const std::vector<Rational> point = { Rational(k, 8) };
      REQUIRE_FALSE(oracle::satisfies(p, bounds, point));
   }

   const auto margin = validate_farkas_exact(p, bounds, std::vector<Rational>{ 1, 1 });
   REQUIRE(margin.has_value());
   CHECK(*margin == ExtendedRational(1));
   CHECK_FALSE(validate_farkas_exact(p, bounds, std::vector<Rational>{ 0, 0 }).has_value());
   const auto doubled = validate_farkas_exact(p, bounds, std::vector<double>{ 2.0, 2.0 });
   REQUIRE(doubled.has_value());
   CHECK(*doubled == ExtendedRational(2));

   // a free variable makes the box maximum infinite
   MipProblem free = p;
   free.lower[0] = kMinusInf;
   free.upper[0] = kInf;
   CHECK(validate_farkas_exact(free, LocalBounds::of(free), std::vector<Rational>{ 1, 1 }).has_value());
   CHECK_FALSE(validate_farkas_exact(free, LocalBounds::of(free), std::vector<Rational>{ 1, 0 }).has_value());
}

TEST_CASE("verify_leaf: pruned exactly at the primal bound") {
   MipProblem p;
   p.add_variable("x", 1, 2, 5, false);
   p.reset_origins();
   BnbEvent event;
   event.kind = EventKind::NodeInfeasible;
   event.lp_status = LeafLpStatus::PrunedAfterSolve;
   event.objective = 2.0;
   event.x = { 2.0 };
   event.reduced_plus = { 1.0 };
   event.reduced_minus = { 0.0 };
   event.primal_bound = 2.0;
   const LeafVerdict v = verify_leaf(p, event, VerifyOptions{});
   CHECK(v.verdict == VerdictClass::Verified);
   CHECK(v.technique == Technique::SafeBounding);
   CHECK_FALSE(v.dual_bound.has_value());
}

TEST_CASE("verify_leaf: rounding leaves the integer-feasible region") {
   // -2e6 x >= -(2e6 - 1), x binary, min -x
   MipProblem p;
   p.add_variable("x", -1, 0, 1, true);
   p.add_row("cap", { { 0, -2000000 } }, -1999999);
   p.reset_origins();

   // oracles: node LP is exactly feasible, the fixing x = 1 is not
   const ExactLpResult node_lp = solve_lp_exact(p, LocalBounds::of(p));
   REQUIRE(node_lp.status == ExactStatus::Optimal);
   REQUIRE(node_lp.x[0] == Rational(1999999, 2000000));
   LocalBounds fixed = LocalBounds::of(p);
   fixed.lower[0] = 1;
   REQUIRE(solve_lp_exact(p, fixed).status == ExactStatus::Infeasible);

   const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
   REQUIRE(outcome.status == BnbStatus::Optimal);
   const BnbEvent* leaf = nullptr;
   for( const BnbEvent& event : outcome.events ) {
      if( event.kind == EventKind::NodeFeasible )
         leaf = &event;
   }
   REQUIRE(leaf != nullptr);
   CHECK(leaf->path.depth == 0);
   const LeafVerdict v = verify_leaf(p, *leaf, VerifyOptions{});
   CHECK(v.verdict == VerdictClass::StrongSolutionError);
   CHECK_FALSE(v.completion_objective.has_value());
}

TEST_CASE("verify_leaf: pruning above the exact value") {
   // min 10 t - 1e-7 w, t fixed at 1, w in [0, 1]; exact value 10 - 1e-7
   MipProblem p;
   p.add_variable("t", 10, 1, 1, false);
   p.add_variable("w", Rational(0) - kTenMillionth, 0, 1, false);
   p.reset_origins();
   const ExactLpResult exact = solve_lp_exact(p, LocalBounds::of(p));
   REQUIRE(exact.objective == ExtendedRational(Rational(10) - kTenMillionth));

   BnbEvent event;
   event.kind = EventKind::NodeInfeasible;
   event.lp_status = LeafLpStatus::PrunedAfterSolve;
   event.objective = 10.0 + 1e-7;
   event.x = { 1.0, 0.0 };
   event.reduced_plus = { 10.0 + 1e-7, 0.0 };
   event.reduced_minus = { 0.0, 0.0 };
   event.primal_bound = 10.0;
   const LeafVerdict v = verify_leaf(p, event, VerifyOptions{});
   CHECK(v.verdict == VerdictClass::StrongBoundError);
   CHECK(v.technique == Technique::ExactLP);
   CHECK(v.dual_bound == exact.objective);

   VerifyOptions capped;
   capped.level_cap = VerifyLevel::Reconstruct;
   CHECK(verify_leaf(p, event, capped).verdict == VerdictClass::Inconclusive);
}

TEST_CASE("classify_hindsight examples") {
   SUBCASE("later incumbent equal to the bound") {
      std::vector<LeafVerdict> verdicts = { verdict_with(VerdictClass::StrongBoundError, 3, 5) };
      classify_hindsight(verdicts, { TimelineEntry{ 7, 5 } });
      CHECK(verdicts[0].verdict == VerdictClass::WeakBoundError);
   }
   SUBCASE("best incumbent above the bound") {
      std::vector<LeafVerdict> verdicts = { verdict_with(VerdictClass::StrongBoundError, 3, 5) };
      classify_hindsight(verdicts, { TimelineEntry{ 7, 6 } });
      CHECK(verdicts[0].verdict == VerdictClass::StrongBoundError);
   }
   SUBCASE("earlier incumbent does not justify") {
      std::vector<LeafVerdict> verdicts = { verdict_with(VerdictClass::WeakBoundError, 3, 5) };
      classify_hindsight(verdicts, { TimelineEntry{ 1, 4 } });
      CHECK(verdicts[0].verdict == VerdictClass::StrongBoundError);
   }
   SUBCASE("gap justified by the final bound") {
      std::vector<LeafVerdict> verdicts = { verdict_with(VerdictClass::StrongGapError, 9, 4) };
      classify_hindsight(verdicts, { TimelineEntry{ 2, 7 }, TimelineEntry{ 5, 4 } });
      CHECK(verdicts[0].verdict == VerdictClass::WeakGapError);
   }
   SUBCASE("timeline collects completion objectives in order") {
      const std::vector<LeafVerdict> verdicts = { feasible_leaf(4, 3), verdict_with(VerdictClass::Verified, 2, 9),
                                                  feasible_leaf(1, 8) };
      const std::vector<TimelineEntry> timeline = exact_timeline(verdicts);
      REQUIRE(timeline.size() == 2);
      CHECK(timeline[0].sequence == 1);
      CHECK(timeline[1].objective == ExtendedRational(3));
   }
}

TEST_CASE("global_bound_interval examples") {
   const ExtendedRational z_star(Rational(55, 4));
   CHECK(global_bound_interval({ feasible_leaf(1, z_star) }, 13.75, true) == BoundInterval{ z_star, z_star });
   CHECK(global_bound_interval({ feasible_leaf(1, z_star), verdict_with(VerdictClass::StrongBoundError, 2, Rational(27, 2)) },
                               13.75, true)
         == BoundInterval{ Rational(27, 2), z_star });
   CHECK(global_bound_interval({ verdict_with(VerdictClass::StrongBoundError, 1, 10),
                                 verdict_with(VerdictClass::StrongGapError, 2, kMinusInf) },
                               13.75, true)
               .lower
         == kMinusInf);
   CHECK(global_bound_interval({ feasible_leaf(1, z_star) }, 13.75, false).lower == kMinusInf);
   LeafVerdict open;
   open.verdict = VerdictClass::Inconclusive;
   CHECK(global_bound_interval({ open }, 13.75, true).lower == kMinusInf);
}

TEST_CASE("safe bounds never exceed the exact optimum") {
   std::mt19937_64 rng(91);
   int checked = 0;
   for( int k = 0; k < 500; ++k ) {
      const MipProblem p = oracle::random_lp(rng, 8, 8);
      const LocalBounds bounds = LocalBounds::of(p);
      const FpLpResult fp = solve_lp_fp(p, bounds, FpTolerances{}, 100000);
      const ExactLpResult exact = solve_lp_exact(p, bounds);
      REQUIRE(exact.status == ExactStatus::Optimal);
      const auto cert = safe_dual_bound(p, bounds, fp.y, fp.reduced_plus, fp.reduced_minus);
      if( !cert )
         continue;
      ++checked;
      check_certificate(p, *cert);
      REQUIRE(cert->safe_bound <= exact.objective);
   }
   MESSAGE("certificates: ", checked);
   CHECK(checked >= 450);
}

TEST_CASE("zero residual reproduces the dual objective") {
   std::mt19937_64 rng(93);
   for( int k = 0; k < 100; ++k ) {
      const MipProblem p = oracle::random_lp(rng, 8, 8);
      const LocalBounds bounds = LocalBounds::of(p);
      const ExactLpResult exact = solve_lp_exact(p, bounds);
      REQUIRE(exact.status == ExactStatus::Optimal);
      const auto cert = safe_dual_bound(p, bounds, exact.y, exact.r_plus, exact.r_minus);
      REQUIRE(cert.has_value());
      for( const Rational& e : cert->residual )
         REQUIRE(e.is_zero());
      REQUIRE(cert->safe_bound == dual_objective(p, bounds, exact.y, exact.r_plus, exact.r_minus));
      REQUIRE(cert->safe_bound == exact.objective);
   }
}

TEST_CASE("exact-only cascade agrees with the full cascade") {
   std::mt19937_64 rng(95);
   VerifyOptions exact_only;
   exact_only.exact_only = true;
   int leaves = 0;
   for( int k = 0; k < 50; ++k ) {
      const MipProblem p = k % 2 == 0 ? oracle::random_binary_mip(rng, 6, 6) : oracle::random_mixed_mip(rng);
      const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
      const EventLog log = log_for(p, outcome);
      const VerificationReport full = verify_events_serial(p, log, VerifyOptions{});
      const VerificationReport exact = verify_events_serial(p, log, exact_only);
      REQUIRE(full.verdicts.size() == exact.verdicts.size());
      for( std::size_t v = 0; v < full.verdicts.size(); ++v ) {
         REQUIRE(full.verdicts[v].verdict == exact.verdicts[v].verdict);
         REQUIRE(exact.verdicts[v].technique == Technique::ExactLP);
         ++leaves;
      }
   }
   CHECK(leaves > 50);
}

TEST_CASE("verdict counts partition the leaves") {
   for( const char* name : { "small_tree.mps", "weak_bound_error.mps", "strong_bound_error.mps",
                             "weak_gap_error.mps", "infeasibility_error.mps" } ) {
      const MipProblem p = propagate_bounds(cleanup_model(fixture(name)), 10);
      const VerificationReport r = verify_events_serial(p, log_for(p, solve_bnb(p, BnbTolerances{}, BnbLimits{})),
                                                        VerifyOptions{});
      const VerdictCounts& c = r.counts;
      CHECK(c.leaves == static_cast<std::int64_t>(r.verdicts.size()));
      CHECK(c.verified + c.errors() + c.inconclusive == c.leaves);
      std::int64_t decided = 0;
      for( std::int64_t t : r.techniques )
         decided += t;
      CHECK(decided == c.leaves - c.inconclusive);
   }
}

TEST_CASE("crafted errors keep the true optimum inside the interval") {
   struct Case {
      const char* name;
      VerdictClass expected;
   };
   const Case cases[] = {
      { "strong_solution_error.mps", VerdictClass::StrongSolutionError },
      { "weak_solution_error.mps", VerdictClass::WeakSolutionError },
      { "strong_bound_error.mps", VerdictClass::StrongBoundError },
      { "weak_bound_error.mps", VerdictClass::WeakBoundError },
      { "strong_gap_error.mps", VerdictClass::StrongGapError },
      { "weak_gap_error.mps", VerdictClass::WeakGapError },
      { "infeasibility_error.mps", VerdictClass::InfeasibilityError },
   };
   for( const Case& c : cases ) {
      CAPTURE(c.name);
      const MipProblem original = fixture(c.name);
      const MipProblem p = propagate_bounds(cleanup_model(original), 10);
      const BnbOutcome outcome = solve_bnb(p, BnbTolerances{}, BnbLimits{});
      const VerificationReport r = verify_events_serial(p, log_for(p, outcome), VerifyOptions{});
      const bool found = std::any_of(r.verdicts.begin(), r.verdicts.end(),
                                     [&](const LeafVerdict& v) { return v.verdict == c.expected; });
      CHECK(found);

      const auto truth = oracle::brute_force_mip(original);
      if( truth ) {
         CHECK(r.interval.lower <= ExtendedRational(*truth));
         CHECK(ExtendedRational(*truth) <= r.interval.upper);
      }
      else {
         CHECK(r.interval.upper == kInf);
      }
   }
}

TEST_CASE("parallel verification matches the serial reference") {
   std::mt19937_64 rng(97);
   for( int k = 0; k < 20; ++k ) {
      const MipProblem p = oracle::random_mixed_mip(rng);
      const EventLog log = log_for(p, solve_bnb(p, BnbTolerances{}, BnbLimits{}));
      const VerificationReport serial = verify_events_serial(p, log, VerifyOptions{});
      for( int jobs : { 1, 2, 4 } )
         REQUIRE(verify_events_parallel(p, log, VerifyOptions{}, jobs) == serial);
   }
}
