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

#include "bnbaudit/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace bnbaudit {

namespace {

bool all_digits(std::string_view s) {
   return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

mpz_class parse_integer(std::string_view text) {
   std::string_view digits = text;
   bool negative = false;
   if( !digits.empty() && (digits.front() == '+' || digits.front() == '-') ) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
   }
   if( !all_digits(digits) )
      throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
   mpz_class value(std::string(digits), 10);
   return negative ? mpz_class(-value) : value;
}

mpz_class pow10(unsigned long exponent) {
   mpz_class result;
   mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
   return result;
}

std::string lowercase(std::string_view s) {
   std::string out(s);
   std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
   return out;
}

}  // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
   if( denominator == 0 )
      throw ArithmeticDomainError("rational with zero denominator");
   q_ = mpq_class(numerator, denominator);
   q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::from_double(double value) {
   if( !std::isfinite(value) )
      throw ArithmeticDomainError("cannot convert a non-finite float to a rational");
   mpq_class q;
   mpq_set_d(q.get_mpq_t(), value);
   return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
   if( text.empty() )
      throw std::invalid_argument("empty number");

   if( const auto slash = text.find('/'); slash != std::string_view::npos ) {
      mpz_class num = parse_integer(text.substr(0, slash));
      std::string_view den_text = text.substr(slash + 1);
      if( !all_digits(den_text) )
         throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
      mpz_class den(std::string(den_text), 10);
      if( den == 0 )
         throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
      return Rational(num, den);
   }

   std::string_view rest = text;
   bool negative = false;
   if( rest.front() == '+' || rest.front() == '-' ) {
      negative = rest.front() == '-';
      rest.remove_prefix(1);
   }

   long exponent = 0;
   if( const auto e = rest.find_first_of("eE"); e != std::string_view::npos ) {
      std::string_view exp_text = rest.substr(e + 1);
      const mpz_class exp_value = parse_integer(exp_text);
      if( !exp_value.fits_slong_p() || ::abs(exp_value) > 100000 )
         throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
      exponent = exp_value.get_si();
      rest = rest.substr(0, e);
   }

   std::string digits;
   if( const auto dot = rest.find('.'); dot != std::string_view::npos ) {
      std::string_view int_part = rest.substr(0, dot);
      std::string_view frac_part = rest.substr(dot + 1);
      if( (int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part))
          || (!frac_part.empty() && !all_digits(frac_part)) )
         throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
   }
   else {
      if( !all_digits(rest) )
         throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
      digits = std::string(rest);
   }

   mpz_class mantissa(digits, 10);
   if( negative )
      mantissa = -mantissa;
   if( exponent >= 0 )
      return Rational(mantissa * pow10(static_cast<unsigned long>(exponent)), 1);
   return Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::floor() const {
   mpz_class result;
   mpz_fdiv_q(result.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
   return Rational(result, 1);
}

Rational Rational::ceil() const {
   mpz_class result;
   mpz_cdiv_q(result.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
   return Rational(result, 1);
}

double Rational::to_double() const {
   if( is_zero() )
      return 0.0;

   const bool negative = sign() < 0;
   mpz_class num = ::abs(q_.get_num());
   const mpz_class& den = q_.get_den();

   // Find e with 2^52 <= num / (den * 2^e) < 2^53, then round the quotient.
   long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 53;
   const mpz_class lo = mpz_class(1) << 52;
   const mpz_class hi = mpz_class(1) << 53;
   mpz_class quotient, remainder, divisor;

   auto divide = [&](long exponent) {
      mpz_class n = num;
      divisor = den;
      if( exponent >= 0 )
         divisor <<= static_cast<mp_bitcnt_t>(exponent);
      else
         n <<= static_cast<mp_bitcnt_t>(-exponent);
      mpz_fdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), n.get_mpz_t(), divisor.get_mpz_t());
   };

   divide(e);
   while( quotient >= hi ) {
      ++e;
      divide(e);
   }
   while( quotient < lo ) {
      --e;
      divide(e);
   }

   // subnormal range: the exponent of the last mantissa bit is fixed
   constexpr long min_exponent = -1074;
   if( e < min_exponent ) {
      e = min_exponent;
      divide(e);
   }

   const int half = cmp(remainder * 2, divisor);
   if( half > 0 || (half == 0 && mpz_odd_p(quotient.get_mpz_t())) )
      ++quotient;

   double magnitude = std::ldexp(quotient.get_d(), static_cast<int>(std::clamp<long>(e, -2000, 2000)));
   return negative ? -magnitude : magnitude;
}

std::string Rational::str() const { return q_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& other) {
   q_ += other.q_;
   return *this;
}

Rational& Rational::operator-=(const Rational& other) {
   q_ -= other.q_;
   return *this;
}

Rational& Rational::operator*=(const Rational& other) {
   q_ *= other.q_;
   return *this;
}

Rational& Rational::operator/=(const Rational& other) {
   if( other.is_zero() )
      throw ArithmeticDomainError("division by zero");
   q_ /= other.q_;
   return *this;
}

ExtendedRational ExtendedRational::from_double(double value) {
   if( std::isnan(value) )
      throw ArithmeticDomainError("NaN has no extended rational value");
   if( std::isinf(value) )
      return value > 0 ? plus_infinity() : minus_infinity();
   return ExtendedRational(Rational::from_double(value));
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
   const std::string lower = lowercase(text);
   if( lower == "inf" || lower == "+inf" || lower == "infinity" || lower == "+infinity" )
      return plus_infinity();
   if( lower == "-inf" || lower == "-infinity" )
      return minus_infinity();
   return ExtendedRational(Rational::parse(text));
}

const Rational& ExtendedRational::finite() const {
   if( !is_finite() )
      throw ArithmeticDomainError("infinite value has no finite representation");
   return value_;
}

int ExtendedRational::sign() const {
   switch( kind_ ) {
   case Kind::PlusInfinity:
      return 1;
   case Kind::MinusInfinity:
      return -1;
   case Kind::Finite:
      break;
   }
   return value_.sign();
}

double ExtendedRational::to_double() const {
   switch( kind_ ) {
   case Kind::PlusInfinity:
      return std::numeric_limits<double>::infinity();
   case Kind::MinusInfinity:
      return -std::numeric_limits<double>::infinity();
   case Kind::Finite:
      break;
   }
   return value_.to_double();
}

std::string ExtendedRational::str() const {
   switch( kind_ ) {
   case Kind::PlusInfinity:
      return "inf";
   case Kind::MinusInfinity:
      return "-inf";
   case Kind::Finite:
      break;
   }
   return value_.str();
}

ExtendedRational ExtendedRational::operator-() const {
   switch( kind_ ) {
   case Kind::PlusInfinity:
      return minus_infinity();
   case Kind::MinusInfinity:
      return plus_infinity();
   case Kind::Finite:
      break;
   }
   return ExtendedRational(-value_);
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
   if( a.is_finite() && b.is_finite() )
      return ExtendedRational(a.value_ + b.value_);
   if( !a.is_finite() && !b.is_finite() && a.kind_ != b.kind_ )
      throw ArithmeticDomainError("inf - inf is undefined");
   return a.is_finite() ? b : a;
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

ExtendedRational operator*(const ExtendedRational& a, const ExtendedRational& b) {
   if( a.is_finite() && b.is_finite() )
      return ExtendedRational(a.value_ * b.value_);
   const int s = a.sign() * b.sign();
   if( s == 0 )
      throw ArithmeticDomainError("0 * inf is undefined");
   return s > 0 ? ExtendedRational::plus_infinity() : ExtendedRational::minus_infinity();
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
   if( a.kind_ != b.kind_ )
      return false;
   return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
   auto rank = [](const ExtendedRational& v) {
      return v.is_minus_infinity() ? 0 : (v.is_finite() ? 1 : 2);
   };
   if( rank(a) != rank(b) )
      return rank(a) <=> rank(b);
   if( a.is_finite() )
      return a.value_ <=> b.value_;
   return std::strong_ordering::equal;
}

Rational reconstruct_rational(double x, std::uint64_t max_denominator) {
   if( !std::isfinite(x) )
      throw ArithmeticDomainError("cannot reconstruct a rational from a non-finite value");
   if( max_denominator == 0 )
      throw std::invalid_argument("max_denominator must be positive");

   const mpq_class target = Rational::from_double(x).value();
   const mpz_class limit(std::to_string(max_denominator), 10);

   // Convergents h_k / k_k via h_k = a_k h_{k-1} + h_{k-2}.
   mpz_class h_prev2 = 0, h_prev1 = 1;
   mpz_class k_prev2 = 1, k_prev1 = 0;
   mpz_class num = target.get_num();
   mpz_class den = target.get_den();

   mpq_class best;
   mpq_class best_distance;
   bool have_best = false;

   while( den != 0 ) {
      mpz_class a, r;
      mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      const mpz_class h = a * h_prev1 + h_prev2;
      const mpz_class k = a * k_prev1 + k_prev2;
      if( k > limit )
         break;

      mpq_class convergent(h, k);
      convergent.canonicalize();
      mpq_class distance = ::abs(convergent - target);
      // denominators grow monotonically, so on ties the earlier one wins
      if( !have_best || distance < best_distance ) {
         best = convergent;
         best_distance = distance;
         have_best = true;
      }

      h_prev2 = h_prev1;
      h_prev1 = h;
      k_prev2 = k_prev1;
      k_prev1 = k;
      num = den;
      den = r;
   }

   return Rational(best);
}

double to_float(const ExtendedRational& value) { return value.to_double(); }

}  // namespace bnbaudit
