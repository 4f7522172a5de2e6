#include "rebc/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

namespace rebc::oracle {

void GridSpec::validate() const {
    if (resolution < 2 || resolution % 2 != 0) {
        throw InputError("grid resolution must be even and at least 2, got " + std::to_string(resolution));
    }
    if (resolution > 4096) throw InputError("grid resolution above 4096 is not supported");
}

std::int64_t NamedInvolution::multiset_size() const {
    switch (kind) {
        case InvolutionKind::SigmaModuli: return std::gcd(rank, degree);
        case InvolutionKind::EtaModuli: return rank;
        default: return 1;
    }
}

std::string NamedInvolution::name() const {
    switch (kind) {
        case InvolutionKind::SigmaPoint: return "sigma_point";
        case InvolutionKind::SigmaPic: return "sigma_pic(" + std::to_string(degree) + ")";
        case InvolutionKind::EtaLine: return "eta_line";
        case InvolutionKind::SigmaModuli:
            return "sigma_moduli(" + std::to_string(rank) + "," + std::to_string(degree) + ")";
        case InvolutionKind::EtaModuli: return "eta_moduli(" + std::to_string(rank) + ")";
    }
    return "unknown";
}

namespace {

// Complex conjugation on C / (Z + tau Z): conj(1) = 1 and
// conj(tau) = 2 Re(tau) - tau, followed by a translation for the
// fixed-point-free structure.
struct ConjugationModel {
    std::int64_t two_re_tau;
    Frac translation_a;
};

ConjugationModel model_for(CurveKind kind) {
    switch (kind) {
        case CurveKind::TwoComponents: return {0, Frac(0)};
        case CurveKind::OneComponent: return {1, Frac(0)};
        case CurveKind::NoRealPoints: return {0, Frac(1, 2)};
    }
    return {0, Frac(0)};
}

std::int32_t to_index_shift(const Frac& t, std::int64_t n) {
    const Frac scaled = frac_part(t) * Frac(n);
    if (scaled.denominator() != 1) throw InputError("involution shift is not on the grid");
    return static_cast<std::int32_t>(scaled.numerator());
}

std::int64_t index_of(const Frac& x, std::int64_t n) {
    const Frac scaled = x * Frac(n);
    if (scaled.denominator() != 1) {
        throw InputError("point coordinate " + to_string(x) + " is not on the 1/" + std::to_string(n) + " grid");
    }
    return scaled.numerator();
}

struct IndexGrid {
    std::vector<std::int32_t> i, j;
};

IndexGrid full_grid(std::int64_t n) {
    IndexGrid g;
    g.i.reserve(static_cast<std::size_t>(n * n));
    g.j.reserve(static_cast<std::size_t>(n * n));
    for (std::int32_t a = 0; a < n; ++a) {
        for (std::int32_t b = 0; b < n; ++b) {
            g.i.push_back(a);
            g.j.push_back(b);
        }
    }
    return g;
}

TorusPoint point_at(std::int64_t flat, std::int64_t n) {
    return {Frac(flat / n, n), Frac(flat % n, n)};
}

// Runs fn(begin, end) over [0, count) in contiguous chunks and concatenates
// the per-chunk outputs in chunk order.
template <typename T, typename Fn>
std::vector<T> chunked(std::int64_t count, unsigned threads, Fn fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::int64_t>(count, 1))));
    std::vector<std::vector<T>> parts(threads);
    const std::int64_t step = (count + threads - 1) / threads;
    if (threads == 1) {
        parts[0] = fn(0, count);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            const auto begin = std::min<std::int64_t>(count, t * step);
            const auto end = std::min<std::int64_t>(count, begin + step);
            pool.emplace_back([&, t, begin, end] { parts[t] = fn(begin, end); });
        }
        for (auto& th : pool) th.join();
    }
    std::vector<T> out;
    for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    return out;
}

double multiset_count(std::int64_t m, std::int64_t k) {
    // C(m + k - 1, k)
    double c = 1.0;
    for (std::int64_t t = 1; t <= k; ++t) c = c * static_cast<double>(m + t - 1) / static_cast<double>(t);
    return c;
}

constexpr double kMaxMultisets = 5e7;

}  // namespace

kernels::AffineIndexMap index_map(const CurveSpec& c, const NamedInvolution& inv, std::int64_t n) {
    const auto model = model_for(c.kind);
    const auto t = static_cast<std::int32_t>(model.two_re_tau);
    kernels::AffineIndexMap map;
    map.n = static_cast<std::int32_t>(n);
    switch (inv.kind) {
        case InvolutionKind::SigmaPoint:
        case InvolutionKind::SigmaPic:
        case InvolutionKind::SigmaModuli: {
            // Pic^k carries conj on the coordinate plus k copies of the translation.
            std::int64_t k = 1;
            if (inv.kind == InvolutionKind::SigmaPic) k = inv.degree;
            if (inv.kind == InvolutionKind::SigmaModuli) k = inv.degree / std::gcd(inv.rank, inv.degree);
            map.m00 = 1;
            map.m01 = t;
            map.m10 = 0;
            map.m11 = -1;
            map.s0 = to_index_shift(model.translation_a * Frac(k), n);
            map.s1 = 0;
            break;
        }
        case InvolutionKind::EtaLine:
        case InvolutionKind::EtaModuli:
            // Dual of the conjugate on Pic^0: the negated linear part, no translation.
            map.m00 = -1;
            map.m01 = -t;
            map.m10 = 0;
            map.m11 = 1;
            break;
    }
    return map;
}

std::vector<GridElement> fixed_points_on_grid(const CurveSpec& c, const NamedInvolution& inv,
                                              const GridSpec& grid) {
    grid.validate();
    if ((inv.kind == InvolutionKind::SigmaModuli || inv.kind == InvolutionKind::EtaModuli) && inv.rank < 1) {
        throw InputError("rank must be at least 1");
    }
    const std::int64_t n = grid.resolution;
    const std::int64_t cells = n * n;
    const auto map = index_map(c, inv, n);
    const auto g = full_grid(n);
    const std::int64_t k = inv.multiset_size();

    if (k == 1) {
        return chunked<GridElement>(cells, grid.threads, [&](std::int64_t begin, std::int64_t end) {
            const auto len = static_cast<std::size_t>(end - begin);
            std::vector<std::uint8_t> mask(len);
            kernels::fixed_mask(map, std::span(g.i).subspan(static_cast<std::size_t>(begin), len),
                                std::span(g.j).subspan(static_cast<std::size_t>(begin), len), mask);
            std::vector<GridElement> out;
            for (std::size_t t = 0; t < len; ++t) {
                if (mask[t]) out.push_back({point_at(begin + static_cast<std::int64_t>(t), n)});
            }
            return out;
        });
    }

    if (multiset_count(cells, k) > kMaxMultisets) {
        throw InputError("Sym^" + std::to_string(k) + " of the 1/" + std::to_string(n) +
                         " grid is too large to enumerate");
    }
    std::vector<std::int32_t> img_i(static_cast<std::size_t>(cells)), img_j(static_cast<std::size_t>(cells));
    kernels::apply(map, g.i, g.j, img_i, img_j);
    std::vector<std::int64_t> image(static_cast<std::size_t>(cells));
    for (std::size_t t = 0; t < image.size(); ++t) image[t] = img_i[t] * n + img_j[t];

    return chunked<GridElement>(cells, grid.threads, [&](std::int64_t begin, std::int64_t end) {
        std::vector<GridElement> out;
        std::vector<std::int64_t> tuple(static_cast<std::size_t>(k));
        std::vector<std::int64_t> moved(static_cast<std::size_t>(k));
        for (std::int64_t first = begin; first < end; ++first) {
            std::fill(tuple.begin(), tuple.end(), first);
            while (true) {
                for (std::size_t t = 0; t < tuple.size(); ++t) moved[t] = image[static_cast<std::size_t>(tuple[t])];
                std::sort(moved.begin(), moved.end());
                if (moved == tuple) {
                    GridElement e;
                    for (const auto idx : tuple) e.push_back(point_at(idx, n));
                    out.push_back(std::move(e));
                }
                // next nondecreasing tuple with the same first entry
                std::int64_t pos = k - 1;
                while (pos >= 1 && tuple[static_cast<std::size_t>(pos)] == cells - 1) --pos;
                if (pos < 1) break;
                const auto v = tuple[static_cast<std::size_t>(pos)] + 1;
                for (auto q = pos; q < k; ++q) tuple[static_cast<std::size_t>(q)] = v;
            }
        }
        return out;
    });
}

std::vector<TorusPoint> fixed_grid_points(const CurveSpec& c, const NamedInvolution& inv,
                                          const GridSpec& grid) {
    if (inv.multiset_size() != 1) throw InputError(inv.name() + " acts on multisets, not points");
    std::vector<TorusPoint> out;
    for (auto& e : fixed_points_on_grid(c, inv, grid)) out.push_back(e.front());
    return out;
}

std::vector<GridComponent> grid_components(const std::vector<TorusPoint>& fixed, const GridSpec& grid) {
    grid.validate();
    const std::int64_t n = grid.resolution;
    std::vector<std::pair<std::int64_t, std::int64_t>> idx;
    idx.reserve(fixed.size());
    for (const auto& p : fixed) idx.emplace_back(index_of(p.a(), n), index_of(p.b(), n));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    if (idx.empty()) return {};

    const auto lift = [n](std::int64_t v) {
        v = ((v % n) + n) % n;
        return v > n / 2 ? v - n : v;
    };
    const auto norm = [&](std::size_t p, std::size_t q) {
        return std::max(std::abs(lift(idx[q].first - idx[p].first)), std::abs(lift(idx[q].second - idx[p].second)));
    };

    std::int64_t min_norm = n;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        for (std::size_t q = p + 1; q < idx.size(); ++q) min_norm = std::min(min_norm, norm(p, q));
    }

    std::vector<std::size_t> parent(idx.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<std::int64_t, std::int64_t>> steps;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        for (std::size_t q = p + 1; q < idx.size(); ++q) {
            if (norm(p, q) != min_norm) continue;
            parent[find(p)] = find(q);
            steps.emplace_back(lift(idx[q].first - idx[p].first), lift(idx[q].second - idx[p].second));
        }
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t p = 0; p < idx.size(); ++p) groups[find(p)].push_back(p);

    std::vector<GridComponent> out;
    for (const auto& [root, members] : groups) {
        GridComponent comp;
        std::vector<std::pair<std::int64_t, std::int64_t>> cells;
        for (const auto m : members) {
            cells.push_back(idx[m]);
            comp.points.emplace_back(Frac(idx[m].first, n), Frac(idx[m].second, n));
        }
        std::sort(comp.points.begin(), comp.points.end());
        if (static_cast<std::int64_t>(cells.size()) == n) {
            for (const auto& [da, db] : steps) {
                auto cur = cells.front();
                std::int64_t length = 0;
                do {
                    cur = {((cur.first + da) % n + n) % n, ((cur.second + db) % n + n) % n};
                    ++length;
                } while (cur != cells.front() && std::binary_search(cells.begin(), cells.end(), cur) && length <= n);
                if (cur == cells.front() && length == n) {
                    comp.is_circle = true;
                    break;
                }
            }
        }
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const GridComponent& x, const GridComponent& y) { return x.points.front() < y.points.front(); });
    return out;
}

std::int64_t grid_component_count(const std::vector<TorusPoint>& fixed, const GridSpec& grid) {
    return static_cast<std::int64_t>(grid_components(fixed, grid).size());
}

std::vector<GridElement> enumerate_multisets(const std::vector<TorusPoint>& points, std::int64_t k) {
    if (k < 1) throw InputError("multiset size must be at least 1");
    std::vector<GridElement> out;
    if (points.empty()) return out;
    if (multiset_count(static_cast<std::int64_t>(points.size()), k) > kMaxMultisets) {
        throw InputError("too many multisets to enumerate");
    }
    const auto m = static_cast<std::int64_t>(points.size());
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(k), 0);
    while (true) {
        GridElement e;
        for (const auto t : tuple) e.push_back(points[static_cast<std::size_t>(t)]);
        out.push_back(std::move(e));
        std::int64_t pos = k - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == m - 1) --pos;
        if (pos < 0) break;
        const auto v = tuple[static_cast<std::size_t>(pos)] + 1;
        for (auto q = pos; q < k; ++q) tuple[static_cast<std::size_t>(q)] = v;
    }
    return out;
}

}  // namespace rebc::oracle
