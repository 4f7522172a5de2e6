#include "rebc/topotypes.hpp"

#include <numeric>

namespace rebc {

namespace {

bool is_even(std::int64_t x) { return x % 2 == 0; }

std::vector<std::vector<int>> parity_vectors(int n, std::int64_t degree) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> bits(static_cast<std::size_t>(n));
        int sum = 0;
        for (int k = 0; k < n; ++k) {
            // bit n-1-k of the mask is entry k, so masks ascend lexicographically
            bits[static_cast<std::size_t>(k)] = static_cast<int>((mask >> (n - 1 - k)) & 1u);
            sum += bits[static_cast<std::size_t>(k)];
        }
        if (is_even(sum - degree)) out.push_back(std::move(bits));
    }
    return out;
}

}  // namespace

std::vector<TopoTypeReal> enumerate_real_types(const CurveSpec& c, std::int64_t rank, std::int64_t degree) {
    if (rank < 1) throw InputError("rank must be at least 1");
    const int n = real_component_count(c.kind);
    std::vector<TopoTypeReal> out;
    if (n == 0) {
        if (is_even(degree)) out.push_back({rank, degree, {}});
        return out;
    }
    for (auto& bits : parity_vectors(n, degree)) out.push_back({rank, degree, std::move(bits)});
    return out;
}

bool quaternionic_exists(int n, std::int64_t rank, std::int64_t degree, std::int64_t genus) {
    if (rank < 1) throw InputError("rank must be at least 1");
    if (n > 0) return is_even(rank) && is_even(degree);
    return is_even(degree + rank * (genus - 1));
}

bool quaternionic_exists(const CurveSpec& c, std::int64_t rank, std::int64_t degree, std::int64_t genus) {
    return quaternionic_exists(real_component_count(c.kind), rank, degree, genus);
}

GenusOneTable component_table_genus1(const CurveSpec& c, std::int64_t rank, std::int64_t degree) {
    if (rank < 1) throw InputError("rank must be at least 1");
    GenusOneTable t;
    t.rank = rank;
    t.degree = degree;
    t.h = std::gcd(rank, degree);
    t.reduced_degree = degree / t.h;
    t.sym_h_caveat = t.h > 1;

    switch (c.kind) {
        case CurveKind::TwoComponents:
            t.iso_target = RealIsoTarget::X;
            t.components = {{"b=0", ModularTag::Real, "circle"},
                            {"b=1/2", ModularTag::Real, "circle"}};
            break;
        case CurveKind::OneComponent:
            t.iso_target = RealIsoTarget::X;
            t.components = {{"b=0", ModularTag::Real, "circle"}};
            break;
        case CurveKind::NoRealPoints:
            if (is_even(t.reduced_degree)) {
                t.iso_target = RealIsoTarget::Pic0;
                t.components = {{"b=0", ModularTag::Real, "circle"},
                                {"b=1/2", ModularTag::Quaternionic, "circle"}};
            } else {
                t.iso_target = RealIsoTarget::X;
            }
            break;
    }
    return t;
}

HigherGenusCount component_count_higher_genus(int n, std::int64_t genus, std::int64_t rank,
                                              std::int64_t degree) {
    if (genus < 2) throw InputError("the higher-genus table needs g >= 2");
    if (rank < 1) throw InputError("rank must be at least 1");
    if (std::gcd(rank, degree) != 1) throw InputError("the higher-genus table needs gcd(r, d) = 1");
    if (n < 0 || n > genus + 1) throw InputError("a genus-g real curve has between 0 and g+1 real circles");

    HigherGenusCount out;
    if (n > 0) {
        out.w1 = parity_vectors(n, degree);
        out.count = static_cast<std::int64_t>(out.w1.size());
        out.tags.assign(out.w1.size(), ModularTag::Real);
        return out;
    }
    const bool d_odd = !is_even(degree);
    const bool rg_odd = !is_even(rank * (genus - 1));
    if (d_odd && !rg_odd) {
        out.count = 0;
    } else if (d_odd && rg_odd) {
        out.count = 1;
        out.tags = {ModularTag::Quaternionic};
    } else if (!d_odd && rg_odd) {
        out.count = 1;
        out.tags = {ModularTag::Real};
    } else {
        out.count = 2;
        out.tags = {ModularTag::Real, ModularTag::Quaternionic};
    }
    return out;
}

}  // namespace rebc
