#include "qakh/laurent.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace qakh {

HalfLaurent HalfLaurent::monomial(long long coeff, int doubled_exp) {
    HalfLaurent p;
    p.set(doubled_exp, coeff);
    return p;
}

void HalfLaurent::set(int key, long long c) {
    if (c == 0)
        terms_.erase(key);
    else
        terms_[key] = c;
}

long long HalfLaurent::coeff(int doubled_exp) const {
    auto it = terms_.find(doubled_exp);
    return it == terms_.end() ? 0 : it->second;
}

int HalfLaurent::min_key() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    return terms_.begin()->first;
}

int HalfLaurent::max_key() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no degree");
    return terms_.rbegin()->first;
}

int HalfLaurent::breadth_doubled() const { return max_key() - min_key(); }

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
    for (auto [k, c] : o.terms_) set(k, coeff(k) + c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) {
    for (auto [k, c] : o.terms_) set(k, coeff(k) - c);
    return *this;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
    HalfLaurent r = *this;
    r += o;
    return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
    HalfLaurent r = *this;
    r -= o;
    return r;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r;
    for (auto [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
    HalfLaurent r;
    for (auto [k1, c1] : terms_)
        for (auto [k2, c2] : o.terms_) r.set(k1 + k2, r.coeff(k1 + k2) + c1 * c2);
    return r;
}

HalfLaurent HalfLaurent::shifted(long long coeff, int doubled_exp) const {
    HalfLaurent r;
    for (auto [k, c] : terms_) r.set(k + doubled_exp, c * coeff);
    return r;
}

HalfLaurent HalfLaurent::mapped_halfunit(int sign, int mul) const {
    HalfLaurent r;
    for (auto [k, c] : terms_) {
        long long s = (sign < 0 && (k & 1)) ? -c : c;
        r.set(k * mul, r.coeff(k * mul) + s);
    }
    return r;
}

long long HalfLaurent::eval_det() const {
    // t^{k/2} -> i^k
    long long re = 0, im = 0;
    for (auto [k, c] : terms_) {
        switch (((k % 4) + 4) % 4) {
            case 0: re += c; break;
            case 1: im += c; break;
            case 2: re -= c; break;
            case 3: im -= c; break;
        }
    }
    if (re != 0 && im != 0)
        throw std::domain_error("evaluation at t=-1 is not a rational integer");
    return std::llabs(re + im);
}

std::string HalfLaurent::str(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto [k, c] : terms_) {
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        long long a = std::llabs(c);
        if (a != 1 || k == 0) out << a;
        if (k != 0) {
            if (a != 1) out << "*";
            out << var;
            if (k != 2) {
                out << "^";
                if (k % 2 == 0)
                    out << k / 2;
                else
                    out << k << "/2";
            }
        }
    }
    return out.str();
}

nlohmann::json HalfLaurent::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [k, c] : terms_) {
        nlohmann::json term;
        term["exponent_doubled"] = k;
        term["coefficient"] = c;
        arr.push_back(term);
    }
    return arr;
}

std::vector<GapRecord> gaps_of(const HalfLaurent& p, int step_key) {
    if (p.is_zero()) throw std::domain_error("gaps_of: zero polynomial");
    if (step_key <= 0) throw std::invalid_argument("gaps_of: bad step");
    int lo = p.min_key(), hi = p.max_key();
    for (auto [k, c] : p.terms())
        if ((k - lo) % step_key != 0)
            throw std::invalid_argument("gaps_of: support off the step lattice");
    std::vector<GapRecord> gaps;
    int run = 0;
    for (int k = lo + step_key; k <= hi; k += step_key) {
        if (p.coeff(k) == 0) {
            ++run;
        } else {
            if (run > 0) gaps.push_back({k - run * step_key, run, step_key});
            run = 0;
        }
    }
    return gaps;
}

std::optional<GapRecord> gap_between(const HalfLaurent& f, const HalfLaurent& g, int step_key) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("gap_between: zero polynomial");
    const HalfLaurent* lo = &f;
    const HalfLaurent* hi = &g;
    if (g.max_key() < f.min_key()) std::swap(lo, hi);
    int M = lo->max_key(), m = hi->min_key();
    if (m <= M) return std::nullopt;  // interleaved supports
    if ((m - M) % step_key != 0)
        throw std::invalid_argument("gap_between: supports off a common lattice");
    int len = (m - M) / step_key - 1;
    if (len <= 0) return std::nullopt;
    return GapRecord{M + step_key, len, step_key};
}

long long determinant_eval(const HalfLaurent& jones) { return jones.eval_det(); }

}  // namespace qakh
