/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// M_n(q), GL_n(q), Sp_{2m}(q) and U_n(q) at desk scale: orders, membership,
// enumeration (by scanning all matrices or by closure from generators) and
// brute-force periodic point counts.
//
// Sp preserves J = [[0, I], [-I, 0]]; U preserves the identity Hermitian
// form over F_{q^2}.

#ifndef FFDYN_GROUPS_HPP
#define FFDYN_GROUPS_HPP

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "counting.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "ff.hpp"
#include "matrix.hpp"
#include "parallel.hpp"

namespace ffdyn {

enum class Family { kM, kGL, kSp, kU };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::kM: return "M";
        case Family::kGL: return "GL";
        case Family::kSp: return "Sp";
        case Family::kU: return "U";
    }
    return "?";
}

struct GroupKind {
    Family family = Family::kGL;
    unsigned n = 1;       // matrix dimension
    std::uint64_t q = 2;  // for U the base field order; entries live in F_{q^2}
    FieldPtr field;

    static GroupKind make(Family family, unsigned n, std::uint64_t q) {
        auto pp = prime_power(q);
        if (!pp) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
        if (n < 1) throw InvalidArgument("dimension must be at least 1");
        if (family == Family::kSp && n % 2 != 0) throw InvalidArgument("Sp needs an even dimension, got " + std::to_string(n));
        GroupKind k;
        k.family = family;
        k.n = n;
        k.q = q;
        k.field = family == Family::kU ? make_quadratic_extension(pp->first, pp->second) : make_field(pp->first, pp->second);
        return k;
    }

    std::string name() const { return std::string(to_string(family)) + "_" + std::to_string(n) + "(" + std::to_string(q) + ")"; }
};

inline ExactInt gl_order(unsigned n, const ExactInt& q) {
    ExactInt r = 1;
    const ExactInt qn = ipow(q, n);
    for (unsigned i = 0; i < n; ++i) r *= qn - ipow(q, i);
    return r;
}

inline ExactInt group_order(const GroupKind& k) {
    const ExactInt q = k.q;
    switch (k.family) {
        case Family::kM: return ipow(q, std::uint64_t{k.n} * k.n);
        case Family::kGL: return gl_order(k.n, q);
        case Family::kSp: {
            const unsigned m = k.n / 2;
            ExactInt r = ipow(q, std::uint64_t{m} * m);
            for (unsigned i = 1; i <= m; ++i) r *= ipow(q, 2 * i) - 1;
            return r;
        }
        case Family::kU: {
            ExactInt r = ipow(q, std::uint64_t{k.n} * (k.n - 1) / 2);
            for (unsigned i = 1; i <= k.n; ++i) r *= ipow(q, i) - (i % 2 ? -1 : 1);
            return r;
        }
    }
    return 0;
}

/// |O^eps_{2mu}(q)| = 2 q^{mu^2 - mu} (q^mu - eps) prod_{j<mu} (q^{2j} - 1).
inline ExactInt orthogonal_order(unsigned mu, int eps, const ExactInt& q) {
    if (mu < 1) throw InvalidArgument("orthogonal_order: mu must be at least 1");
    if (eps != 1 && eps != -1) throw InvalidArgument("orthogonal_order: eps must be +1 or -1");
    ExactInt r = 2 * ipow(q, std::uint64_t{mu} * mu - mu) * (ipow(q, mu) - eps);
    for (unsigned j = 1; j < mu; ++j) r *= ipow(q, 2 * j) - 1;
    return r;
}

inline Matrix symplectic_form(const FieldPtr& F, unsigned n) {
    Matrix J(F, n);
    const unsigned m = n / 2;
    for (unsigned i = 0; i < m; ++i) {
        J(i, m + i) = F->one();
        J(m + i, i) = F->neg(F->one());
    }
    return J;
}

inline bool is_member(const GroupKind& k, const Matrix& A) {
    if (A.dim() != k.n) throw InvalidArgument("is_member: dimension mismatch");
    switch (k.family) {
        case Family::kM: return true;
        case Family::kGL: return A.det() != 0;
        case Family::kSp: {
            const Matrix J = symplectic_form(k.field, k.n);
            return A.transpose() * J * A == J;
        }
        case Family::kU: return (A.conj_transpose() * A).is_identity();
    }
    return false;
}

struct EnumerationOptions {
    std::uint64_t filter_guard = std::uint64_t{1} << 26;  // matrices scanned
    std::uint64_t filter_max = std::uint64_t{1} << 20;    // above this, Sp/U use closure
    std::uint64_t group_guard = std::uint64_t{1} << 26;   // elements stored
    std::uint64_t seed = 0x5eed;
    bool use_cache = true;
};

namespace detail {

inline std::uint64_t matrix_space_size(const GroupKind& k, std::uint64_t guard) {
    return checked_power(k.field->order(), k.n * k.n, guard);
}

inline bool use_filter(const GroupKind& k, const EnumerationOptions& opt) {
    if (k.family == Family::kM || k.family == Family::kGL) return true;
    try {
        return matrix_space_size(k, opt.filter_max) <= opt.filter_max;
    } catch (const GuardExceeded&) {
        return false;
    }
}

/// Compact hash key: field indices as 16- or 32-bit integers.
inline std::string compact_key(const FieldSpec& F, const Matrix& A) {
    std::string s;
    if (F.order() <= 65536) {
        s.resize(A.entries().size() * 2);
        for (std::size_t i = 0; i < A.entries().size(); ++i) {
            const auto v = static_cast<std::uint16_t>(F.index(A.entries()[i]));
            std::memcpy(&s[2 * i], &v, 2);
        }
    } else {
        s.resize(A.entries().size() * 4);
        for (std::size_t i = 0; i < A.entries().size(); ++i) {
            const auto v = static_cast<std::uint32_t>(F.index(A.entries()[i]));
            std::memcpy(&s[4 * i], &v, 4);
        }
    }
    return s;
}

inline Matrix random_matrix_vector_outer(const FieldPtr& F, const std::vector<Elem>& u, const std::vector<Elem>& w) {
    const auto n = static_cast<unsigned>(u.size());
    Matrix r(F, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) r(i, j) = F->mul(u[i], w[j]);
    return r;
}

/// A random member of the generating family: symplectic transvections
/// I + a v (Jv)^T, or unitary quasi-reflections I + (alpha - 1) v v^* / (v^* v).
inline std::optional<Matrix> random_generator(const GroupKind& k, std::mt19937_64& rng) {
    const FieldPtr& F = k.field;
    const unsigned n = k.n;
    std::uniform_int_distribution<std::uint64_t> pick(0, F->order() - 1);
    std::vector<Elem> v(n);
    bool nonzero = false;
    for (auto& x : v) {
        x = F->from_index(pick(rng));
        nonzero = nonzero || x != 0;
    }
    if (!nonzero) return std::nullopt;
    const Matrix I = Matrix::identity(F, n);
    if (k.family == Family::kSp) {
        const Elem a = F->from_index(pick(rng));
        if (a == 0) return std::nullopt;
        const Matrix J = symplectic_form(F, n);
        std::vector<Elem> jv(n, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) jv[i] = F->add(jv[i], F->mul(J(i, j), v[j]));
        std::vector<Elem> av(n);
        for (unsigned i = 0; i < n; ++i) av[i] = F->mul(a, v[i]);
        return I + random_matrix_vector_outer(F, av, jv);
    }
    Elem norm = 0;
    for (auto x : v) norm = F->add(norm, F->mul(F->conj(x), x));
    if (norm == 0) return std::nullopt;
    const Elem alpha = F->from_index(pick(rng));
    if (alpha == 0 || F->mul(alpha, F->conj(alpha)) != F->one() || alpha == F->one()) return std::nullopt;
    const Elem c = F->mul(F->sub(alpha, F->one()), F->inv(norm));
    std::vector<Elem> cv(n), vs(n);
    for (unsigned i = 0; i < n; ++i) {
        cv[i] = F->mul(c, v[i]);
        vs[i] = F->conj(v[i]);
    }
    return I + random_matrix_vector_outer(F, cv, vs);
}

inline std::vector<Matrix> closure(const GroupKind& k, const std::vector<Matrix>& gens, std::uint64_t guard) {
    const auto& F = *k.field;
    std::unordered_set<std::string> seen;
    std::vector<Matrix> elems;
    const Matrix I = Matrix::identity(k.field, k.n);
    seen.insert(compact_key(F, I));
    elems.push_back(I);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            Matrix x = elems[head] * g;
            if (seen.insert(compact_key(F, x)).second) {
                if (elems.size() >= guard) throw GuardExceeded("closure of " + k.name() + " exceeds the group guard");
                elems.push_back(std::move(x));
            }
        }
    }
    return elems;
}

inline std::filesystem::path cache_path(const GroupKind& k) {
    const char* dir = std::getenv("FFDYN_CACHE");
    if (!dir || !*dir) return {};
    return std::filesystem::path(dir) / (std::string(to_string(k.family)) + "_" + std::to_string(k.n) + "_" +
                                         std::to_string(k.field->characteristic()) + "_" + std::to_string(k.field->degree()) + ".bin");
}

constexpr char kCacheMagic[8] = {'F', 'F', 'D', 'Y', 'N', 'G', 'R', '1'};

inline std::optional<std::vector<Matrix>> load_cache(const GroupKind& k, const ExactInt& order) {
    const auto path = cache_path(k);
    if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path, std::ios::binary);
    char magic[8];
    std::uint32_t hdr[4];
    std::uint64_t count = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(hdr), sizeof hdr);
    in.read(reinterpret_cast<char*>(&count), sizeof count);
    if (!in || std::memcmp(magic, kCacheMagic, 8) != 0 || hdr[0] != k.n || hdr[1] != k.field->characteristic() ||
        hdr[2] != k.field->degree() || hdr[3] != static_cast<std::uint32_t>(k.family) || ExactInt(count) != order)
        return std::nullopt;
    std::vector<Matrix> elems;
    elems.reserve(count);
    std::vector<std::uint32_t> buf(std::size_t{k.n} * k.n);
    for (std::uint64_t i = 0; i < count; ++i) {
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 4));
        if (!in) return std::nullopt;
        std::vector<Elem> e(buf.size());
        for (std::size_t j = 0; j < buf.size(); ++j) e[j] = k.field->from_index(buf[j]);
        elems.emplace_back(k.field, k.n, std::move(e));
    }
    return elems;
}

inline void store_cache(const GroupKind& k, const std::vector<Matrix>& elems) {
    const auto path = cache_path(k);
    if (path.empty()) return;
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        const std::uint32_t hdr[4] = {k.n, k.field->characteristic(), k.field->degree(), static_cast<std::uint32_t>(k.family)};
        const std::uint64_t count = elems.size();
        out.write(kCacheMagic, 8);
        out.write(reinterpret_cast<const char*>(hdr), sizeof hdr);
        out.write(reinterpret_cast<const char*>(&count), sizeof count);
        std::vector<std::uint32_t> buf(std::size_t{k.n} * k.n);
        for (const auto& m : elems) {
            for (std::size_t j = 0; j < buf.size(); ++j) buf[j] = static_cast<std::uint32_t>(k.field->index(m.entries()[j]));
            out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * 4));
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace detail

/// fn(A) for every member whose matrix index lies in [begin, end).
template <class Fn>
void for_each_member_in_range(const GroupKind& k, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
    Matrix A(k.field, k.n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        A = Matrix::from_index(k.field, k.n, idx);
        if (is_member(k, A)) fn(A);
    }
}

/// Every element of the group, each exactly once. Sp and U beyond the filter
/// threshold are built by closure and checked against group_order.
inline std::vector<Matrix> enumerate_group(const GroupKind& k, const EnumerationOptions& opt = {}) {
    const ExactInt order = group_order(k);
    if (order > opt.group_guard) throw GuardExceeded(k.name() + " has " + order.str() + " elements, above the group guard");
    if (opt.use_cache)
        if (auto cached = detail::load_cache(k, order)) return std::move(*cached);
    std::vector<Matrix> elems;
    if (detail::use_filter(k, opt)) {
        const std::uint64_t total = detail::matrix_space_size(k, opt.filter_guard);
        for_each_member_in_range(k, 0, total, [&](const Matrix& A) { elems.push_back(A); });
    } else {
        if (k.family != Family::kSp && k.family != Family::kU) throw GuardExceeded(k.name() + " is too large to scan");
        std::mt19937_64 rng(opt.seed);
        std::vector<Matrix> gens;
        for (int attempt = 0; attempt < 8; ++attempt) {
            while (gens.size() < 3 + 2 * static_cast<std::size_t>(attempt)) {
                auto g = detail::random_generator(k, rng);
                if (g && is_member(k, *g)) gens.push_back(std::move(*g));
            }
            elems = detail::closure(k, gens, opt.group_guard);
            if (ExactInt(elems.size()) == order) break;
        }
        if (ExactInt(elems.size()) != order)
            throw VerificationFailure("closure of " + k.name() + " reached " + std::to_string(elems.size()) + " elements, expected " + order.str());
    }
    if (ExactInt(elems.size()) != order)
        throw VerificationFailure("enumeration of " + k.name() + " found " + std::to_string(elems.size()) + " elements, expected " + order.str());
    if (opt.use_cache && !detail::use_filter(k, opt)) detail::store_cache(k, elems);
    return elems;
}

struct BruteOptions {
    EnumerationOptions enumeration;
    ParallelContext ctx;
    std::uint64_t orbit_samples = 64;  // elements cross-checked by explicit orbit
};

/// Number of elements periodic under x -> x^L, by the structural test on
/// every element. The test is valid for any L prime to q, so only that is
/// required. A sample of elements is re-checked by explicit orbit.
inline ExactInt brute_periodic_count(const GroupKind& k, std::uint64_t L, const BruteOptions& opt = {}) {
    CountParams::make(k.field->order(), L, 1);
    auto sample_check = [&](const Matrix& A, PeriodicityContext& pc) {
        const bool s = pc.periodic(A);
        if (s != orbit_report(A, L).periodic) throw VerificationFailure("structural and orbit periodicity disagree on " + A.to_string());
        return s;
    };
    if (k.family == Family::kM || k.family == Family::kGL) {
        const std::uint64_t total = detail::matrix_space_size(k, opt.enumeration.filter_guard);
        const std::uint64_t stride = std::max<std::uint64_t>(1, total / std::max<std::uint64_t>(1, opt.orbit_samples));
        return parallel_sum<ExactInt>(opt.ctx, total, [&](std::uint64_t b, std::uint64_t e) {
            PeriodicityContext pc(k.field, L, true);
            std::uint64_t count = 0;
            for (std::uint64_t idx = b; idx < e; ++idx) {
                const Matrix A = Matrix::from_index(k.field, k.n, idx);
                if (k.family == Family::kGL && A.det() == 0) continue;
                const bool per = idx % stride == 0 ? sample_check(A, pc) : pc.periodic(A);
                count += per;
            }
            return ExactInt(count);
        });
    }
    const auto elems = enumerate_group(k, opt.enumeration);
    const std::uint64_t stride = std::max<std::uint64_t>(1, elems.size() / std::max<std::uint64_t>(1, opt.orbit_samples));
    return parallel_sum<ExactInt>(opt.ctx, elems.size(), [&](std::uint64_t b, std::uint64_t e) {
        PeriodicityContext pc(k.field, L, true);
        std::uint64_t count = 0;
        for (std::uint64_t i = b; i < e; ++i) count += i % stride == 0 ? sample_check(elems[i], pc) : pc.periodic(elems[i]);
        return ExactInt(count);
    });
}

}  // namespace ffdyn

#endif
