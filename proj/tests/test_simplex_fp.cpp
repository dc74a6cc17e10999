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

#include "doctest.h"

#include "bnbaudit/simplex_exact.hpp"
#include "bnbaudit/simplex_fp.hpp"
#include "bnbaudit/verifier.hpp"
#include "oracles/oracles.hpp"

using namespace bnbaudit;

namespace {

constexpr int kIterations = 100000;

FpLpResult solve(const MipProblem& p) {
   return solve_lp_fp(p, LocalBounds::of(p), FpTolerances{}, kIterations);
}

bool close(double fp, const Rational& exact) {
   const double e = exact.to_double();
   return std::abs(fp - e) <= 1e-6 * (1.0 + std::abs(e));
}

}  // namespace

TEST_CASE("empty problem") {
   MipProblem p;
   p.add_variable("x", 0, 0, 1, false);
   p.reset_origins();
   const FpLpResult r = solve(p);
   CHECK(r.status == LpStatus::Optimal);
   CHECK(r.objective == 0.0);
}

TEST_CASE("single variable at its upper bound") {
   MipProblem p;
   p.add_variable("x", -1, 0, 1, false);
   p.reset_origins();
   const ExactLpResult exact = solve_lp_exact(p, LocalBounds::of(p));
   REQUIRE(exact.status == ExactStatus::Optimal);
   REQUIRE(exact.objective == ExtendedRational(-1));

   const FpLpResult r = solve(p);
   CHECK(r.status == LpStatus::Optimal);
   CHECK(r.objective == -1.0);
   CHECK(r.x == std::vector<double>{ 1.0 });
   CHECK(r.reduced_minus == std::vector<double>{ 1.0 });
   CHECK(r.reduced_plus == std::vector<double>{ 0.0 });
}

TEST_CASE("contradicting rows give a Farkas ray") {
   MipProblem p;
   p.add_variable("x", 0, ExtendedRational::minus_infinity(), ExtendedRational::plus_infinity(), false);
   p.add_row("lo", { { 0, 1 } }, 1);
   p.add_row("hi", { { 0, -1 } }, 0);
   p.reset_origins();
   // hand certificate first
   const std::vector<Rational> hand = { 1, 1 };
   const auto hand_margin = validate_farkas_exact(p, LocalBounds::of(p), hand);
   REQUIRE(hand_margin.has_value());
   CHECK(*hand_margin == ExtendedRational(1));

   const FpLpResult r = solve(p);
   REQUIRE(r.status == LpStatus::Infeasible);
   REQUIRE(r.farkas.size() == 2);
   CHECK(r.farkas[0] > 0.0);
   CHECK(r.farkas[0] == r.farkas[1]);
   CHECK(validate_farkas_exact(p, LocalBounds::of(p), r.farkas).has_value());
}

TEST_CASE("unbounded relaxation") {
   MipProblem p;
   p.add_variable("x", -1, 0, ExtendedRational::plus_infinity(), false);
   p.add_variable("y", -1, 0, ExtendedRational::plus_infinity(), false);
   p.add_row("r", { { 0, 1 }, { 1, 1 } }, 0);
   p.reset_origins();
   CHECK(solve(p).status == LpStatus::Unbounded);
}

TEST_CASE("random LPs agree with the exact solver") {
   std::mt19937_64 rng(101);
   int infeasible = 0;
   for( int k = 0; k < 500; ++k ) {
      const MipProblem p = oracle::random_lp(rng, 8, 8, k % 5 != 0);
      const ExactLpResult exact = solve_lp_exact(p, LocalBounds::of(p));
      const FpLpResult fp = solve(p);
      if( exact.status == ExactStatus::Infeasible ) {
         ++infeasible;
         REQUIRE(fp.status == LpStatus::Infeasible);
         CHECK(validate_farkas_exact(p, LocalBounds::of(p), fp.farkas).has_value());
         continue;
      }
      REQUIRE(exact.status == ExactStatus::Optimal);
      REQUIRE(fp.status == LpStatus::Optimal);
      REQUIRE_MESSAGE(close(fp.objective, exact.objective.finite()), "instance ", k);
      REQUIRE(fp.basis.has_value());
      CHECK(fp.basis->num_basic() == p.num_rows());
      for( int i = 0; i < p.num_rows(); ++i )
         CHECK(fp.y[i] >= -1e-7);
      for( int j = 0; j < p.num_vars(); ++j ) {
         CHECK(fp.reduced_plus[j] >= 0.0);
         CHECK(fp.reduced_minus[j] >= 0.0);
      }
   }
   MESSAGE("infeasible instances: ", infeasible);
   CHECK(infeasible > 0);
}

TEST_CASE("factorized basis reproduces the objective") {
   std::mt19937_64 rng(202);
   int optimal = 0;
   for( int k = 0; k < 200; ++k ) {
      const MipProblem p = oracle::random_lp(rng, 8, 8);
      const FpLpResult fp = solve(p);
      REQUIRE(fp.status == LpStatus::Optimal);
      const FactorizationResult f = factorize_basis_exact(p, LocalBounds::of(p), *fp.basis);
      if( f.outcome != FactorizationOutcome::Optimal )
         continue;
      ++optimal;
      REQUIRE(close(fp.objective, f.bound.finite()));
   }
   MESSAGE("exactly optimal bases: ", optimal, " of 200");
   CHECK(optimal >= 190);
}

TEST_CASE("solves are deterministic") {
   std::mt19937_64 rng(303);
   for( int k = 0; k < 50; ++k ) {
      const MipProblem p = oracle::random_lp(rng, 8, 8, k % 3 != 0);
      const FpLpData data(p);
      const FpLpResult a = solve_lp_fp(data, LocalBounds::of(p), FpTolerances{}, kIterations);
      const FpLpResult b = solve_lp_fp(p, LocalBounds::of(p), FpTolerances{}, kIterations);
      REQUIRE(a.status == b.status);
      REQUIRE(std::memcmp(&a.objective, &b.objective, sizeof(double)) == 0);
      REQUIRE(a.x == b.x);
      REQUIRE(a.y == b.y);
      REQUIRE(a.reduced_plus == b.reduced_plus);
      REQUIRE(a.reduced_minus == b.reduced_minus);
      REQUIRE(a.basis == b.basis);
      REQUIRE(a.farkas == b.farkas);
      REQUIRE(a.iterations == b.iterations);
   }
}

TEST_CASE("iteration budget") {
   std::mt19937_64 rng(404);
   int checked = 0;
   for( int k = 0; k < 50 && checked < 10; ++k ) {
      const MipProblem p = oracle::random_lp(rng, 8, 8);
      const FpLpResult full = solve(p);
      if( full.iterations < 2 )
         continue;
      ++checked;
      const FpLpResult cut = solve_lp_fp(p, LocalBounds::of(p), FpTolerances{}, full.iterations - 1);
      CHECK(cut.status == LpStatus::IterationLimit);
   }
   CHECK(checked == 10);
}
