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

#ifndef BNBAUDIT_VERIFIER_HPP_
#define BNBAUDIT_VERIFIER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bnbaudit/bnb.hpp"
#include "bnbaudit/event_log.hpp"
#include "bnbaudit/model.hpp"
#include "bnbaudit/simplex_exact.hpp"

namespace bnbaudit {

/// Exactly dual feasible point built from approximate duals.
struct SafeDualCertificate {
   std::vector<Rational> y;
   std::vector<Rational> r_plus;
   std::vector<Rational> r_minus;
   std::vector<Rational> residual;
   ExtendedRational safe_bound;
};

/// Shifts the dual residual c - A^T y - r+ + r- into the reduced costs so
/// that A^T y + r+ - r- = c holds exactly. Entries in [-zerotol, 0) are
/// clamped to zero; anything more negative gives nullopt.
std::optional<SafeDualCertificate> safe_dual_bound(const MipProblem& problem, const LocalBounds& bounds,
                                                   std::span<const double> y, std::span<const double> r_plus,
                                                   std::span<const double> r_minus, double zerotol = 1e-9);

std::optional<SafeDualCertificate> safe_dual_bound(const MipProblem& problem, const LocalBounds& bounds,
                                                   std::span<const Rational> y, std::span<const Rational> r_plus,
                                                   std::span<const Rational> r_minus);

/// y^T b - max{ y^T A x : l <= x <= u } when positive, nullopt otherwise.
/// An empty box is certified with margin +inf.
std::optional<ExtendedRational> validate_farkas_exact(const MipProblem& problem, const LocalBounds& bounds,
                                                      std::span<const Rational> ray);
std::optional<ExtendedRational> validate_farkas_exact(const MipProblem& problem, const LocalBounds& bounds,
                                                      std::span<const double> ray, double zerotol = 1e-9);

enum class VerdictClass : std::uint8_t {
   Verified,
   WeakSolutionError,
   StrongSolutionError,
   WeakBoundError,
   StrongBoundError,
   WeakGapError,
   StrongGapError,
   InfeasibilityError,
   Inconclusive,
};

std::string to_string(VerdictClass verdict);
VerdictClass verdict_class_from_string(const std::string& text);
bool is_error(VerdictClass verdict);

enum class Technique : std::uint8_t { SafeBounding, Reconstruction, Factorization, ExactLP };

std::string to_string(Technique technique);
Technique technique_from_string(const std::string& text);

enum class VerifyLevel : std::uint8_t { Safe, Reconstruct, Factorize, Exact };

std::string to_string(VerifyLevel level);
VerifyLevel verify_level_from_string(const std::string& text);

struct VerifyOptions {
   std::uint64_t max_denominator = std::uint64_t{ 1 } << 32;
   VerifyLevel level_cap = VerifyLevel::Exact;
   /// Skip every cheaper technique and decide with the exact LP alone.
   bool exact_only = false;
   /// Settings for re-solving deleted nodes in floating point.
   BnbTolerances tolerances;
   int lp_iteration_limit = 100000;
};

struct LeafVerdict {
   std::int64_t sequence = 0;
   int node_id = 0;
   EventKind kind = EventKind::NodeFeasible;
   VerdictClass verdict = VerdictClass::Verified;
   std::optional<Technique> technique;
   /// Exact dual bound carried by an error (exact node LP value), +inf for a
   /// weak solution error.
   std::optional<ExtendedRational> dual_bound;
   /// Objective of the exact completion of a NodeFeasible leaf.
   std::optional<ExtendedRational> completion_objective;

   friend bool operator==(const LeafVerdict&, const LeafVerdict&) = default;
};

/// Runs the cascade on one leaf event. Bound and gap errors come back as
/// Strong; classify_hindsight settles weak versus strong.
LeafVerdict verify_leaf(const MipProblem& problem, const BnbEvent& event, const VerifyOptions& options);

struct TimelineEntry {
   std::int64_t sequence = 0;
   ExtendedRational objective;
};

/// Exact incumbent objectives in discovery order.
std::vector<TimelineEntry> exact_timeline(const std::vector<LeafVerdict>& verdicts);

void classify_hindsight(std::vector<LeafVerdict>& verdicts, const std::vector<TimelineEntry>& timeline);

struct BoundInterval {
   ExtendedRational lower;
   ExtendedRational upper;

   friend bool operator==(const BoundInterval&, const BoundInterval&) = default;
};

/// Lower end: min of z*, every error payload and every verified exact
/// completion value, or -inf when the search was incomplete. Upper end: the
/// best exact incumbent, +inf without one.
BoundInterval global_bound_interval(const std::vector<LeafVerdict>& verdicts, double z_star, bool search_complete);

struct VerdictCounts {
   std::int64_t leaves = 0;
   std::int64_t verified = 0;
   std::int64_t solution_weak = 0;
   std::int64_t solution_strong = 0;
   std::int64_t bound_weak = 0;
   std::int64_t bound_strong = 0;
   std::int64_t gap_weak = 0;
   std::int64_t gap_strong = 0;
   std::int64_t infeasibility = 0;
   std::int64_t inconclusive = 0;

   std::int64_t errors() const;
   std::int64_t strong_errors() const;

   friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

struct VerificationReport {
   std::string model_name;
   std::string model_hash;
   BnbStatus solver_status = BnbStatus::Infeasible;
   double z_star = 0.0;
   std::vector<LeafVerdict> verdicts;
   VerdictCounts counts;
   std::array<std::int64_t, 4> techniques{};
   BoundInterval interval;
   std::int64_t unsolved_nodes = 0;

   bool fully_verified() const;

   friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Reference implementation: one leaf after another.
VerificationReport verify_events_serial(const MipProblem& problem, const EventLog& log, const VerifyOptions& options);

/// Same result as the serial version; leaves are verified on `jobs` OpenMP
/// threads (0 = runtime default).
VerificationReport verify_events_parallel(const MipProblem& problem, const EventLog& log, const VerifyOptions& options,
                                          int jobs);

}  // namespace bnbaudit

#endif
