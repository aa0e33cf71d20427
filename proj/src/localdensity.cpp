#include "terqf/localdensity.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "terqf/arith.hpp"
#include "terqf/binaryqf.hpp"
#include "terqf/errors.hpp"

namespace terqf {

namespace {

constexpr int infinite_valuation = 1 << 20;

int valuation128(i128 x, i128 p)
{
    if (x == 0)
        return infinite_valuation;
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// Sum of count * p^exponent.
using PowerSum = std::map<int, std::int64_t>;

mpq_class to_rational(PowerSum const & s, std::int64_t p)
{
    mpq_class total = 0;
    for (auto const & [e, count] : s)
        total += rational_pow(p, e) * mpq_class(static_cast<long>(count));
    return total;
}

/*
 * A node is the residue class of v modulo p^c. With s the valuation of the
 * gradient G v (capped at c) and t the valuation of Q(v) - n:
 *   s < c : every lift satisfies Q = Q(v) mod p^{c+s}, and beyond that level
 *           the linear term is a unit linear form, so the class has density
 *           p^{s-2c} if t >= c+s and 0 otherwise;
 *   s >= c: Q is constant mod p^{2c} on the class; refine to p^3 children.
 * finite[k] accumulates the density at level k for k <= klim (the last level
 * at which this node is reached), limit accumulates the k -> infinity value.
 */
class DensityTree
{
    public:
    /// primitive: only residues not all divisible by p.
    DensityTree(TernaryForm const & form, std::int64_t p, std::int64_t n, int K,
                bool want_limit, int max_depth, bool primitive = false)
        : q_(form), G_(gram_matrix(form)), p_(p), n_(n), K_(K),
          max_depth_(max_depth), primitive_(primitive), finite_(static_cast<std::size_t>(K + 1))
    {
        if (!is_prime(p))
            throw PreconditionError(std::to_string(p) + " is not prime");
        if (!is_positive_definite(form))
            throw PreconditionError("form " + format_form(form) + " is not positive definite");
        // Residues below p^depth keep Q(v) well inside 128 bits.
        int depth = std::max(K, want_limit ? max_depth : 0);
        i128 bound = 1;
        for (int i = 0; i < depth; ++i) {
            bound *= p;
            if (bound > (static_cast<i128>(1) << 48))
                throw PreconditionError("lift depth too large for p = " + std::to_string(p));
        }
        visit({0, 0, 0}, 0, 1, K, want_limit);
    }

    mpq_class finite(int k) const { return to_rational(finite_[static_cast<std::size_t>(k)], p_); }
    mpq_class limit() const { return to_rational(limit_, p_); }

    private:
    using V = std::array<i128, 3>;

    void visit(V const & v, int c, i128 pc, int klim, bool in_limit)
    {
        if (in_limit && c > max_depth_)
            throw PreconditionError("local density did not stabilize within depth "
                                    + std::to_string(max_depth_));
        i128 Q = static_cast<i128>(q_.a) * v[0] * v[0] + static_cast<i128>(q_.b) * v[1] * v[1]
                 + static_cast<i128>(q_.c) * v[2] * v[2] + static_cast<i128>(q_.d) * v[1] * v[2]
                 + static_cast<i128>(q_.e) * v[0] * v[2] + static_cast<i128>(q_.f) * v[0] * v[1];
        int t = valuation128(Q - n_, p_);
        int s = c;
        for (int r = 0; r < 3; ++r) {
            i128 g = 0;
            for (int col = 0; col < 3; ++col)
                g += static_cast<i128>(G_[r][col]) * v[col];
            s = std::min(s, valuation128(g, p_));
        }

        if (c >= 1 && c <= klim && t >= c)
            add(finite_[static_cast<std::size_t>(c)], -2 * c);

        if (s < c) {
            for (int k = c + 1; k <= klim; ++k) {
                if (k >= c + s) {
                    if (t >= c + s)
                        add(finite_[static_cast<std::size_t>(k)], s - 2 * c);
                } else if (t >= k) {
                    add(finite_[static_cast<std::size_t>(k)], k - 3 * c);
                }
            }
            if (in_limit && t >= c + s)
                add(limit_, s - 2 * c);
            return;
        }

        int child_klim = c;  // no finite level reached
        if (t >= 2 * c)
            child_klim = klim;
        else if (t >= c + 1)
            child_klim = std::min(klim, t);
        bool child_in_limit = in_limit && t >= 2 * c;
        if (child_klim < c + 1 && !child_in_limit)
            return;
        for (std::int64_t i = 0; i < p_; ++i)
            for (std::int64_t j = 0; j < p_; ++j)
                for (std::int64_t l = 0; l < p_; ++l) {
                    if (primitive_ && c == 0 && i == 0 && j == 0 && l == 0)
                        continue;
                    visit({v[0] + pc * i, v[1] + pc * j, v[2] + pc * l}, c + 1, pc * p_,
                          child_klim, child_in_limit);
                }
    }

    static void add(PowerSum & s, int e) { ++s[e]; }

    TernaryForm q_;
    GramMatrix G_;
    std::int64_t p_;
    std::int64_t n_;
    int K_;
    int max_depth_;
    bool primitive_;
    std::vector<PowerSum> finite_;
    PowerSum limit_;
};

}  // namespace

mpq_class local_density_finite(TernaryForm const & form, std::int64_t p, std::int64_t n,
                               int k)
{
    if (k < 1)
        throw PreconditionError("lift level k must be >= 1");
    return DensityTree(form, p, n, k, false, k).finite(k);
}

mpq_class local_density_scan(TernaryForm const & form, std::int64_t p, std::int64_t n,
                             int k)
{
    if (k < 1)
        throw PreconditionError("lift level k must be >= 1");
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) {
        pk *= p;
        if (pk > 100)
            throw PreconditionError("direct residue scan limited to p^{3k} <= 10^6");
    }
    std::int64_t target = mod(n, pk);
    std::int64_t count = 0;
    for (std::int64_t x = 0; x < pk; ++x)
        for (std::int64_t y = 0; y < pk; ++y)
            for (std::int64_t z = 0; z < pk; ++z)
                if (mod(evaluate(form, x, y, z), pk) == target)
                    ++count;
    return mpq_class(static_cast<long>(count)) * rational_pow(p, -2 * k);
}

LocalDensityValue local_density(TernaryForm const & form, std::int64_t p, std::int64_t n,
                                int max_depth)
{
    if (n < 1)
        throw PreconditionError("local density needs n >= 1");
    if (p >= 2) {
        int reachable = 0;
        for (i128 pw = p; pw <= (static_cast<i128>(1) << 48); pw *= p)
            ++reachable;
        max_depth = std::min(max_depth, reachable);
    }
    // d(n) = d_prim(n) + d(n / p^2) / p: solutions divisible by p are p times
    // solutions for n / p^2, so only the primitive part needs a lifting tree.
    int ord = valuation(4 * n * discriminant(form), p);
    LocalDensityValue out{0, p, 0};
    bool found = false;
    for (int K = std::min(ord + 4, max_depth); K <= max_depth && !found; K += 8) {
        DensityTree tree(form, p, n, K, true, max_depth, true);
        for (int k = std::max(2, ord + 1); k <= K; ++k) {
            mpq_class cur = tree.finite(k);
            if (cur != tree.finite(k - 1))
                continue;
            if (cur != tree.limit())
                throw InconsistencyError("finite density " + rational_string(cur)
                                         + " disagrees with lifting limit "
                                         + rational_string(tree.limit()) + " at p = "
                                         + std::to_string(p) + ", n = " + std::to_string(n));
            out.value = cur;
            out.k_used = k;
            found = true;
            break;
        }
    }
    if (!found)
        throw PreconditionError("local density did not stabilize within depth "
                                + std::to_string(max_depth));
    if (n % (p * p) == 0) {
        LocalDensityValue rest = local_density(form, p, n / (p * p), max_depth);
        out.value += rest.value / p;
        out.k_used = std::max(out.k_used, rest.k_used + 2);
    }
    return out;
}

mpq_class good_prime_density(std::int64_t delta, std::int64_t p, std::int64_t n)
{
    if (!is_prime(p) || p == 2 || delta % p == 0)
        throw PreconditionError("good_prime_density needs an odd prime not dividing the discriminant");
    if (n < 1)
        throw PreconditionError("good_prime_density needs n >= 1");
    int e = valuation(n, p);
    std::int64_t m = n / ipow(p, e);
    mpq_class one_over_p(1, p);
    if (e % 2 == 0) {
        int k = e / 2;
        mpq_class symbol(kronecker(mod<std::int64_t>(-m * delta, p), p));
        return 1 + one_over_p + rational_pow(p, -(k + 1)) * (symbol - 1);
    }
    int k = (e - 1) / 2;
    return (1 + one_over_p) * (1 - rational_pow(p, -(k + 1)));
}

SymbolicReal::SymbolicReal(mpq_class r, std::int64_t m) : r_(std::move(r)), m_(1)
{
    if (m < 1)
        throw PreconditionError("SymbolicReal radicand must be positive");
    std::int64_t root = 1;
    if (m > 1)
        for (auto const & [p, e] : factorize(m)) {
            if (e % 2)
                m_ *= p;
            root *= ipow(p, e / 2);
        }
    r_ /= root;
    r_.canonicalize();
    if (r_ == 0)
        m_ = 1;
}

double SymbolicReal::approx() const
{
    return r_.get_d() * std::numbers::pi / std::sqrt(static_cast<double>(m_));
}

std::string SymbolicReal::str() const
{
    return rational_string(r_) + "*pi/sqrt(" + std::to_string(m_) + ")";
}

SymbolicReal operator*(SymbolicReal const & x, mpq_class const & q)
{
    return SymbolicReal(x.r_ * q, x.m_);
}

SymbolicReal l_value(std::int64_t m)
{
    if (m < 1 || !is_squarefree(m))
        throw PreconditionError("l_value needs a squarefree positive integer");
    if (m == 1)
        return {mpq_class(1, 4), 1};
    if (m == 3)
        return {mpq_class(1, 2), 3};
    if (m % 8 == 3)
        return {mpq_class(3, 2) * class_number(-m), m};
    if (m % 8 == 7)
        return {mpq_class(1, 2) * class_number(-m), m};
    return {mpq_class(1, 2) * class_number(-4 * m), m};
}

SymbolicReal l_value_general(std::int64_t n)
{
    ArithmeticDecomposition dec = decompose_n(n);
    SymbolicReal L = l_value(dec.squarefree);
    mpq_class correction = 1;
    if (dec.odd_square_root > 1)
        for (auto const & [p, e] : factorize(dec.odd_square_root))
            correction *= 1 - mpq_class(kronecker(-dec.squarefree, p), p);
    return L * correction;
}

double l_value_partial_sum(std::int64_t n, std::int64_t terms)
{
    double s = 0;
    for (std::int64_t m = 1; m <= terms; ++m)
        s += kronecker(-4 * n, m) / static_cast<double>(m);
    return s;
}

mpq_class p_correction(std::int64_t n, std::int64_t delta)
{
    if (n < 1)
        throw PreconditionError("p_correction needs n >= 1");
    mpq_class P = 1;
    if (n == 1)
        return P;
    for (auto const & [p, e] : factorize(n)) {
        if (p == 2 || e < 2 || delta % p == 0)
            continue;
        int b = e / 2;
        mpq_class term = 0;
        for (int j = 0; j < b; ++j)
            term += rational_pow(p, -j);
        std::int64_t rest = n / ipow(p, 2 * b);
        mpq_class symbol(kronecker(-delta * rest, p));
        term += rational_pow(p, -b) / (1 - symbol / p);
        P *= term;
    }
    return P;
}

std::string rational_string(mpq_class const & q)
{
    return q.get_str();
}

nlohmann::ordered_json SiegelAssembly::to_json() const
{
    nlohmann::ordered_json j;
    j["form"] = format_form(form);
    j["n"] = n;
    j["discriminant"] = delta;
    j["l_value"] = l_value.str();
    j["prefactor_times_l"] = rational_string(prefactor);
    j["p_correction"] = rational_string(p_factor);
    j["bad_primes"] = nlohmann::ordered_json::array();
    for (auto const & d : bad_primes)
        j["bad_primes"].push_back(
            {{"p", d.p}, {"density", rational_string(d.value)}, {"k_used", d.k_used}});
    j["odd_factor"] = rational_string(odd_factor);
    j["count"] = rational_string(count);
    return j;
}

SiegelAssembly siegel_assembly(TernaryForm const & form, std::int64_t n)
{
    if (!is_positive_definite(form))
        throw PreconditionError("form " + format_form(form) + " is not positive definite");
    if (n < 1)
        throw PreconditionError("siegel count needs n >= 1");
    SiegelAssembly out;
    out.form = form;
    out.n = n;
    out.delta = discriminant(form);
    std::int64_t dn = out.delta * n;
    out.l_value = l_value_general(dn);

    // 32 sqrt(n) / (pi sqrt(Δ)) * r pi / sqrt(m) = 32 r sqrt(n Δ m) / (Δ m)
    std::int64_t m = out.l_value.radicand();
    i128 ndm = static_cast<i128>(dn) * m;
    i128 root = isqrt(ndm);
    if (root * root != ndm)
        throw InconsistencyError("square roots do not cancel in the Siegel prefactor");
    out.prefactor = mpq_class(32) * out.l_value.rational()
                    * mpq_class(static_cast<long>(root), static_cast<long>(out.delta * m));
    out.prefactor.canonicalize();

    out.p_factor = p_correction(n, out.delta);
    out.odd_factor = 1;
    for (auto const & [p, e] : factorize(2 * out.delta)) {
        out.bad_primes.push_back(local_density(form, p, n));
        if (p > 2)
            out.odd_factor *= 1 / (1 - mpq_class(1, p * p));
    }
    out.count = out.prefactor * out.p_factor * out.odd_factor;
    for (auto const & d : out.bad_primes)
        out.count *= d.value;
    out.count.canonicalize();
    return out;
}

std::int64_t siegel_count(TernaryForm const & form, std::int64_t n)
{
    SiegelAssembly a = siegel_assembly(form, n);
    if (a.count.get_den() != 1 || a.count < 0)
        throw InconsistencyError("Siegel count is not a non-negative integer: "
                                 + a.to_json().dump());
    return to_integer(a.count);
}

}  // namespace terqf
