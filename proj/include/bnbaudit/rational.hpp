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

#ifndef BNBAUDIT_RATIONAL_HPP_
#define BNBAUDIT_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bnbaudit {

/// Raised for operations without a mathematically valid result, such as
/// inf - inf, 0 * inf, division by zero or reconstructing a NaN.
class ArithmeticDomainError : public std::domain_error {
public:
   using std::domain_error::domain_error;
};

/// Exact rational number, always kept in canonical form (gcd 1, positive
/// denominator).
class Rational {
public:
   Rational() = default;
   Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
   Rational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
   Rational(const mpz_class& numerator, const mpz_class& denominator);
   explicit Rational(mpq_class value);

   /// Exact value of a finite binary64 number.
   static Rational from_double(double value);

   /// Parses "12", "-0.1", "1e-6", "2.5E+3" or "p/q" exactly.
   static Rational parse(std::string_view text);

   const mpq_class& value() const { return q_; }
   mpz_class numerator() const { return q_.get_num(); }
   mpz_class denominator() const { return q_.get_den(); }

   int sign() const { return sgn(q_); }
   bool is_zero() const { return sign() == 0; }
   bool is_integer() const { return q_.get_den() == 1; }

   Rational abs() const;
   Rational floor() const;
   Rational ceil() const;

   /// Round-to-nearest-even conversion to binary64.
   double to_double() const;

   /// "p" for integers, "p/q" otherwise.
   std::string str() const;

   Rational operator-() const;
   Rational& operator+=(const Rational& other);
   Rational& operator-=(const Rational& other);
   Rational& operator*=(const Rational& other);
   Rational& operator/=(const Rational& other);

   friend Rational operator+(Rational a, const Rational& b) { return a += b; }
   friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
   friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
   friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

   friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
   friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
      const int c = cmp(a.q_, b.q_);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
   }

private:
   mpq_class q_;
};

/// Rational extended by +inf and -inf, used for variable bounds and dual
/// bounds.
class ExtendedRational {
public:
   enum class Kind : std::uint8_t { Finite, PlusInfinity, MinusInfinity };

   ExtendedRational() = default;
   ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT
   ExtendedRational(long value) : value_(value) {}                 // NOLINT
   ExtendedRational(int value) : value_(value) {}                  // NOLINT

   static ExtendedRational plus_infinity() { return ExtendedRational(Kind::PlusInfinity); }
   static ExtendedRational minus_infinity() { return ExtendedRational(Kind::MinusInfinity); }

   /// Exact conversion; +-inf map to the infinities, NaN is rejected.
   static ExtendedRational from_double(double value);

   /// Accepts everything Rational::parse does plus "inf", "+inf", "-inf",
   /// "infinity" (any case).
   static ExtendedRational parse(std::string_view text);

   Kind kind() const { return kind_; }
   bool is_finite() const { return kind_ == Kind::Finite; }
   bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }
   bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }

   /// The finite value; throws ArithmeticDomainError for the infinities.
   const Rational& finite() const;

   int sign() const;
   double to_double() const;
   std::string str() const;

   ExtendedRational operator-() const;
   friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
   friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);
   friend ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b);

   friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
   friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

private:
   explicit ExtendedRational(Kind kind) : kind_(kind) {}

   Kind kind_ = Kind::Finite;
   Rational value_;
};

/// Best continued-fraction convergent p/q of x with q <= max_denominator.
/// The binary64 value is first converted exactly; ties between equidistant
/// convergents go to the smaller denominator.
Rational reconstruct_rational(double x, std::uint64_t max_denominator);

double to_float(const ExtendedRational& value);

}  // namespace bnbaudit

#endif
