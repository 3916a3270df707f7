#ifndef CALIB_RATIONAL_HPP
#define CALIB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace calib {

	/// Exact rational number used for calibration costs. Costs enter the
	/// system as decimal strings and are only added and compared, so a
	/// normalized int64 fraction is more than enough headroom.
	class Rational {
		std::int64_t num_ = 0;
		std::int64_t den_ = 1;

		void normalize() {
			if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
			if (den_ < 0) { num_ = -num_; den_ = -den_; }
			const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
			if (g > 1) { num_ /= g; den_ /= g; }
		}

	public:
		Rational() = default;
		Rational(std::int64_t n) : num_(n), den_(1) {}
		Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

		std::int64_t num() const { return num_; }
		std::int64_t den() const { return den_; }

		Rational operator+(const Rational& o) const {
			return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
		}
		Rational operator-(const Rational& o) const {
			return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
		}
		Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }

		// exact comparisons; denominators are positive after normalization
		bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
		bool operator!=(const Rational& o) const { return !(*this == o); }
		bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
		bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
		bool operator>(const Rational& o) const { return o < *this; }
		bool operator>=(const Rational& o) const { return o <= *this; }

		/// Renders the exact value, as a plain decimal when the denominator
		/// divides a power of ten ("3", "1.5", "0.75") and as "p/q" otherwise.
		std::string to_string() const {
			if (den_ == 1) return std::to_string(num_);
			std::int64_t d = den_;
			int twos = 0, fives = 0;
			while (d % 2 == 0) { d /= 2; ++twos; }
			while (d % 5 == 0) { d /= 5; ++fives; }
			if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
			const int digits = twos > fives ? twos : fives;
			std::int64_t scale = 1;
			for (int i = 0; i < digits; ++i) scale *= 10;
			std::int64_t scaled = num_ * (scale / den_);
			const bool neg = scaled < 0;
			std::string s = std::to_string(neg ? -scaled : scaled);
			while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
			s.insert(s.end() - digits, '.');
			return (neg ? "-" : "") + s;
		}

		/// Parses "3", "1.5", "-0.25" or "p/q" exactly.
		static Rational parse(const std::string& text) {
			if (text.empty()) throw std::invalid_argument("empty rational literal");
			const auto slash = text.find('/');
			if (slash != std::string::npos) {
				return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
			}
			const auto dot = text.find('.');
			if (dot == std::string::npos) return Rational(std::stoll(text));
			const std::string head = text.substr(0, dot);
			const std::string frac = text.substr(dot + 1);
			if (frac.empty() || frac.size() > 17) throw std::invalid_argument("bad decimal literal: " + text);
			std::int64_t scale = 1;
			for (char c : frac) {
				if (c < '0' || c > '9') throw std::invalid_argument("bad decimal literal: " + text);
				scale *= 10;
			}
			const bool neg = !head.empty() && head[0] == '-';
			const std::int64_t whole = head.empty() || head == "-" ? 0 : std::stoll(head);
			const std::int64_t part = std::stoll(frac);
			const std::int64_t mag = (whole < 0 ? -whole : whole) * scale + part;
			return Rational(neg ? -mag : mag, scale);
		}
	};

} // namespace calib

#endif
