#include "ferrook/field.hpp"

#include <sstream>
#include <stdexcept>

namespace ferrook {

bool prime_power_decompose(std::uint64_t q, std::uint32_t& p, unsigned& k) {
    if (q < 2) return false;
    std::uint64_t d = 2;
    while (d * d <= q && q % d != 0) ++d;
    if (q % d != 0) d = q;
    std::uint64_t rest = q;
    unsigned e = 0;
    while (rest % d == 0) {
        rest /= d;
        ++e;
    }
    if (rest != 1) return false;
    p = static_cast<std::uint32_t>(d);
    k = e;
    return true;
}

namespace {

// Known Conway polynomials, constant term first.
std::vector<std::uint32_t> conway(std::uint32_t p, unsigned k) {
    if (p == 2 && k == 2) return {1, 1, 1};
    if (p == 2 && k == 3) return {1, 1, 0, 1};
    if (p == 2 && k == 4) return {1, 1, 0, 0, 1};
    if (p == 3 && k == 2) return {2, 2, 1};
    return {};
}

// Multiplies the element `a` (digits base p) by x modulo the monic `mod`.
std::uint32_t times_x(std::uint32_t a, std::uint32_t p, unsigned k, const std::vector<std::uint32_t>& mod) {
    std::vector<std::uint32_t> d(k + 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        d[i + 1] = a % p;
        a /= p;
    }
    const std::uint32_t top = d[k];
    for (unsigned i = 0; i < k; ++i) d[i] = (d[i] + (p - (top * mod[i]) % p)) % p;
    std::uint32_t out = 0;
    for (unsigned i = k; i-- > 0;) out = out * p + d[i];
    return out;
}

// Order of x in (GF(p)[x]/mod)^*, or 0 if x^e never returns to 1 within q-1 steps.
bool x_is_primitive(std::uint32_t p, unsigned k, const std::vector<std::uint32_t>& mod, std::uint32_t q) {
    if (mod[0] == 0) return false;
    std::uint32_t cur = 1;
    for (std::uint32_t e = 1; e < q; ++e) {
        cur = times_x(cur, p, k, mod);
        if (cur == 1) return e == q - 1;
    }
    return false;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    for (std::uint32_t g = 2; g < p; ++g) {
        std::uint64_t cur = 1;
        std::uint32_t order = 0;
        do {
            cur = cur * g % p;
            ++order;
        } while (cur != 1);
        if (order == p - 1) return g;
    }
    throw std::logic_error("no primitive root found");
}

}  // namespace

FieldTable::FieldTable(std::uint32_t q) : q_(q) {
    if (q > 65536 || !prime_power_decompose(q, p_, k_)) {
        throw std::invalid_argument("field order must be a prime power <= 65536, got " + std::to_string(q));
    }
    exp_.assign(2 * static_cast<std::size_t>(q_ - 1), 0);
    log_.assign(q_, 0);

    if (k_ == 1) {
        const std::uint32_t g = smallest_primitive_root(p_);
        modulus_ = {0, 1};
        std::uint64_t cur = 1;
        for (std::uint32_t e = 0; e < q_ - 1; ++e) {
            exp_[e] = static_cast<Elem>(cur);
            cur = cur * g % p_;
        }
    } else {
        modulus_ = conway(p_, k_);
        if (modulus_.empty()) {
            // lexicographically first monic primitive polynomial of degree k
            std::uint32_t count = q_;  // p^k candidates for the low coefficients
            for (std::uint32_t code = 0; code < count; ++code) {
                std::vector<std::uint32_t> cand(k_ + 1, 0);
                std::uint32_t c = code;
                for (unsigned i = 0; i < k_; ++i) {
                    cand[i] = c % p_;
                    c /= p_;
                }
                cand[k_] = 1;
                if (x_is_primitive(p_, k_, cand, q_)) {
                    modulus_ = cand;
                    break;
                }
            }
        }
        if (modulus_.empty() || !x_is_primitive(p_, k_, modulus_, q_)) {
            throw std::logic_error("failed to find a primitive modulus for q = " + std::to_string(q_));
        }
        std::uint32_t cur = 1;
        for (std::uint32_t e = 0; e < q_ - 1; ++e) {
            exp_[e] = static_cast<Elem>(cur);
            cur = times_x(cur, p_, k_, modulus_);
        }
    }
    for (std::uint32_t e = 0; e < q_ - 1; ++e) {
        exp_[e + q_ - 1] = exp_[e];
        log_[exp_[e]] = e;
    }

    if (p_ != 2) {
        neg_table_.resize(q_);
        for (std::uint32_t a = 0; a < q_; ++a) neg_table_[a] = digit_add(0, static_cast<Elem>(a), true);
        if (q_ <= 256) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a) {
                for (std::uint32_t b = 0; b < q_; ++b) {
                    add_table_[static_cast<std::size_t>(a) * q_ + b] =
                        digit_add(static_cast<Elem>(a), static_cast<Elem>(b), false);
                }
            }
        }
    }
}

Elem FieldTable::digit_add(Elem a, Elem b, bool negate_b) const {
    std::uint32_t out = 0, scale = 1;
    std::uint32_t x = a, y = b;
    for (unsigned i = 0; i < k_; ++i) {
        std::uint32_t da = x % p_, db = y % p_;
        if (negate_b) db = (p_ - db) % p_;
        out += ((da + db) % p_) * scale;
        scale *= p_;
        x /= p_;
        y /= p_;
    }
    return static_cast<Elem>(out);
}

std::string FieldTable::describe() const {
    std::ostringstream os;
    os << "GF(" << q_ << ")";
    if (k_ > 1) {
        os << " = GF(" << p_ << ")[x]/(";
        bool first = true;
        for (unsigned i = k_ + 1; i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (modulus_[i] != 1 || i == 0) os << modulus_[i];
            if (i > 0) os << (modulus_[i] != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        }
        os << ")";
    } else {
        os << ", generator " << generator();
    }
    return os.str();
}

}  // namespace ferrook
