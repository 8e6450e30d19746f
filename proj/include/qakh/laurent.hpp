#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qakh {

// Laurent polynomial with integer coefficients and exponents in steps of
// 1/2. Exponents are stored doubled, so key 2k means x^k and key 1 means
// x^{1/2}. Zero coefficients are never stored.
class HalfLaurent {
public:
    HalfLaurent() = default;

    static HalfLaurent monomial(long long coeff, int doubled_exp);
    static HalfLaurent one() { return monomial(1, 0); }

    bool is_zero() const { return terms_.empty(); }
    long long coeff(int doubled_exp) const;
    const std::map<int, long long>& terms() const { return terms_; }

    int min_key() const;  // doubled exponent of lowest term; throws if zero
    int max_key() const;

    // max exponent - min exponent, in doubled units
    int breadth_doubled() const;

    HalfLaurent& operator+=(const HalfLaurent& o);
    HalfLaurent& operator-=(const HalfLaurent& o);
    HalfLaurent operator+(const HalfLaurent& o) const;
    HalfLaurent operator-(const HalfLaurent& o) const;
    HalfLaurent operator-() const;
    HalfLaurent operator*(const HalfLaurent& o) const;
    bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }

    // multiply by coeff * x^{doubled_exp/2}
    HalfLaurent shifted(long long coeff, int doubled_exp) const;

    // Monomial substitution on the half-unit lattice: writing the
    // polynomial in u = x^{1/2}, maps u -> sign * y^{mul/2}. A term with
    // key k becomes sign^k * y-term with key k*mul.
    HalfLaurent mapped_halfunit(int sign, int mul) const;

    // Exact substitution t^{1/2} -> i (Gaussian integers); returns |value|.
    // Throws if the value is not purely real or purely imaginary.
    long long eval_det() const;

    std::string str(const std::string& var) const;
    nlohmann::json to_json() const;

private:
    void set(int key, long long c);
    std::map<int, long long> terms_;
};

struct GapRecord {
    int start_key = 0;  // doubled exponent of the first missing monomial
    int length = 0;     // number of missing lattice points
    int step_key = 0;   // lattice spacing, doubled
    bool operator==(const GapRecord& o) const {
        return start_key == o.start_key && length == o.length && step_key == o.step_key;
    }
};

// Maximal runs of zero coefficients strictly inside the support of p,
// measured on the lattice min_key + k*step_key. Throws if p is zero or its
// support does not lie on that lattice.
std::vector<GapRecord> gaps_of(const HalfLaurent& p, int step_key);

// Gap strictly between the supports of f and g (either order), in lattice
// units of step_key. nullopt when supports interleave or touch.
std::optional<GapRecord> gap_between(const HalfLaurent& f, const HalfLaurent& g, int step_key);

// det(L) = |V_L(-1)| evaluated exactly over the Gaussian integers.
long long determinant_eval(const HalfLaurent& jones);

}  // namespace qakh
