#include "multicurve/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "multicurve/multicurve.hpp"
#include "multicurve/type_invariant.hpp"

namespace mcv {

namespace {

int64_t mod_pos(int64_t a, int64_t b) {
    int64_t r = a % b;
    return r < 0 ? r + b : r;
}

// for each cuff index: the pants whose three boundary cuffs are all known
// once this cuff is assigned (cuffs are filled in increasing order)
std::vector<std::vector<int>> pants_completed_at(const PantsDecomposition& pd) {
    std::vector<std::vector<int>> at(pd.num_cuffs());
    for (int p = 0; p < pd.num_pants(); ++p) {
        int last = 0;
        for (int s = 0; s < 3; ++s) last = std::max(last, pd.slot_cuff[p][s]);
        at[last].push_back(p);
    }
    return at;
}

struct EnumContext {
    const SurfaceData& sd;
    int64_t L;
    const Sector* sector;
    const std::function<void(const DTCoordinates&)>& visit;
    std::vector<std::vector<int>> completes;
    DTCoordinates c;

    void rec(int cuff, int64_t budget) {
        const int n = sd.surface.num_cuffs();
        if (cuff == n) {
            if (c.is_zero()) return;
            int64_t nrm = L - budget;
            if (sector && !sector->contains(c, nrm)) return;
            visit(c);
            return;
        }
        for (int64_t m = 0; m <= budget; ++m) {
            c.m[cuff] = m;
            bool parity_ok = true;
            for (int p : completes[cuff]) {
                int64_t sum = 0;
                for (int s = 0; s < 3; ++s) sum += c.m[sd.pants.slot_cuff[p][s]];
                if (sum % 2) {
                    parity_ok = false;
                    break;
                }
            }
            if (!parity_ok) continue;
            int64_t rest = budget - m;
            int64_t lo = (m == 0) ? 0 : -rest;
            if (sector && !sector->orthant.empty()) {
                if (sector->orthant[cuff] > 0)
                    lo = std::max<int64_t>(lo, 0);
            }
            for (int64_t t = lo; t <= rest; ++t) {
                if (sector && !sector->orthant.empty() && sector->orthant[cuff] < 0 && t > 0)
                    break;
                c.t[cuff] = t;
                rec(cuff + 1, rest - std::llabs(t));
            }
            c.t[cuff] = 0;
        }
        c.m[cuff] = 0;
    }
};

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

bool Sector::contains(const DTCoordinates& c, int64_t nrm) const {
    const int n = static_cast<int>(c.m.size());
    if (!orthant.empty())
        for (int i = 0; i < n; ++i)
            if (static_cast<int64_t>(orthant[i]) * c.t[i] < 0) return false;
    if (box_lo.empty()) return true;
    for (int i = 0; i < 2 * n; ++i) {
        int64_t v = i < n ? c.m[i] : std::llabs(c.t[i - n]);
        Rational u(v, nrm);
        if (u < box_lo[i]) return false;
        if (box_hi[i] < 1 ? u >= box_hi[i] : u > box_hi[i]) return false;
    }
    return true;
}

bool Sector::is_nonempty() const {
    if (box_lo.empty()) return true;
    Rational lo_sum = 0, hi_sum = 0;
    for (const auto& x : box_lo) lo_sum += x;
    for (const auto& x : box_hi) hi_sum += x;
    return lo_sum <= 1 && hi_sum >= 1;
}

std::string Sector::describe() const {
    if (orthant.empty() && box_lo.empty()) return "full";
    std::string s = "orthant:";
    for (int x : orthant) s += x > 0 ? '+' : '-';
    if (!box_lo.empty()) {
        s += " box:";
        for (size_t i = 0; i < box_lo.size(); ++i) {
            if (i) s += ',';
            s += "[" + box_lo[i].str() + "," + box_hi[i].str() + ")";
        }
    }
    return s;
}

void enumerate_points(const SurfaceData& sd, int64_t L, const Sector* sector,
                      const std::function<void(const DTCoordinates&)>& visit) {
    EnumContext ctx{sd, L, sector, visit, pants_completed_at(sd.pants), {}};
    const int n = sd.surface.num_cuffs();
    ctx.c.m.assign(n, 0);
    ctx.c.t.assign(n, 0);
    ctx.rec(0, L);
}

int64_t count_points(const SurfaceData& sd, int64_t L, const Sector* sector) {
    int64_t n = 0;
    enumerate_points(sd, L, sector, [&](const DTCoordinates&) { ++n; });
    return n;
}

int64_t CountTable::total_at(size_t gi) const {
    int64_t s = 0;
    for (const auto& [k, v] : rows) s += v[gi];
    return s;
}

std::string CountTable::to_csv() const {
    std::string out = "L,type_key,count\n";
    for (size_t gi = 0; gi < grid.size(); ++gi)
        for (const auto& [k, v] : rows)
            out += std::to_string(grid[gi]) + ",\"" + k + "\"," + std::to_string(v[gi]) + "\n";
    return out;
}

namespace {

// memoized topological type keyed by the twist-reduced signature
struct TypeMemo {
    const SurfaceData& sd;
    std::map<std::vector<int64_t>, std::string> memo;

    const std::string& key_for(const DTCoordinates& c) {
        std::vector<int64_t> sig;
        const int n = static_cast<int>(c.m.size());
        sig.reserve(2 * n);
        for (int i = 0; i < n; ++i) {
            sig.push_back(c.m[i]);
            sig.push_back(c.m[i] > 0 ? mod_pos(c.t[i], c.m[i]) : c.t[i]);
        }
        auto it = memo.find(sig);
        if (it != memo.end()) return it->second;
        auto key = topological_type(sd, decode(sd, c)).key();
        return memo.emplace(std::move(sig), std::move(key)).first->second;
    }
};

struct Task {
    int64_t m0, t0;
};

}  // namespace

CountTable count_by_type(const SurfaceData& sd, const std::vector<int64_t>& grid,
                         const Sector* sector, int workers) {
    if (grid.empty()) throw std::invalid_argument("count_by_type: empty grid");
    for (size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw std::invalid_argument("count_by_type: grid not increasing");
    auto t0 = std::chrono::steady_clock::now();

    const int64_t Lmax = grid.back();
    const int n = sd.surface.num_cuffs();

    // work partition by the (m_1, t_1) prefix
    std::vector<Task> tasks;
    for (int64_t m = 0; m <= Lmax; ++m)
        for (int64_t t = (m == 0 ? 0 : -(Lmax - m)); m + std::llabs(t) <= Lmax; ++t)
            tasks.push_back({m, t});

    using Partial = std::map<std::string, std::vector<int64_t>>;
    std::vector<Partial> results(tasks.size());
    std::atomic<size_t> next{0};

    auto run_task = [&](size_t ti, TypeMemo& memo) {
        const Task& task = tasks[ti];
        Partial& out = results[ti];
        // enumerate with the first cuff pinned
        EnumContext ctx{
            sd, Lmax, sector,
            [&](const DTCoordinates& c) {
                int64_t nrm = norm(c);
                size_t gi = std::lower_bound(grid.begin(), grid.end(), nrm) - grid.begin();
                if (gi == grid.size()) return;
                auto& v = out[memo.key_for(c)];
                if (v.empty()) v.assign(grid.size(), 0);
                v[gi] += 1;
            },
            pants_completed_at(sd.pants),
            {}};
        ctx.c.m.assign(n, 0);
        ctx.c.t.assign(n, 0);
        ctx.c.m[0] = task.m0;
        ctx.c.t[0] = task.t0;
        // parity of a pants completed at cuff 0 (impossible for genus >= 2)
        ctx.rec(1, Lmax - task.m0 - std::llabs(task.t0));
    };

    workers = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            TypeMemo memo{sd, {}};
            while (true) {
                size_t ti = next.fetch_add(1);
                if (ti >= tasks.size()) break;
                run_task(ti, memo);
            }
        });
    for (auto& th : pool) th.join();

    CountTable table;
    table.grid = grid;
    table.genus = sd.surface.genus;
    table.sector_desc = sector ? sector->describe() : "full";
    table.workers = workers;
    for (const auto& part : results)
        for (const auto& [k, v] : part) {
            auto& row = table.rows[k];
            if (row.empty()) row.assign(grid.size(), 0);
            for (size_t i = 0; i < grid.size(); ++i) row[i] += v[i];
        }
    // bucketed counts -> cumulative counts
    for (auto& [k, v] : table.rows)
        for (size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];

    std::string id_src = std::to_string(table.genus) + "|" + table.sector_desc + "|";
    for (auto L : grid) id_src += std::to_string(L) + ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(id_src)));
    table.run_id = buf;
    table.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return table;
}

CountTable count_in_sector(const SurfaceData& sd, const std::string& type_key,
                           const Sector& sector, const std::vector<int64_t>& grid, int workers) {
    if (!sector.is_nonempty()) {
        CountTable empty;
        empty.grid = grid;
        empty.genus = sd.surface.genus;
        empty.sector_desc = sector.describe();
        empty.rows[type_key].assign(grid.size(), 0);
        return empty;
    }
    CountTable all = count_by_type(sd, grid, &sector, workers);
    CountTable out;
    out.grid = all.grid;
    out.genus = all.genus;
    out.sector_desc = all.sector_desc;
    out.run_id = all.run_id;
    out.workers = all.workers;
    out.wall_seconds = all.wall_seconds;
    auto it = all.rows.find(type_key);
    out.rows[type_key] =
        it != all.rows.end() ? it->second : std::vector<int64_t>(grid.size(), 0);
    return out;
}

int parity_rank(const SurfaceData& sd) {
    const int n = sd.surface.num_cuffs();
    std::vector<uint64_t> rows;
    for (int p = 0; p < sd.pants.num_pants(); ++p) {
        uint64_t row = 0;
        for (int s = 0; s < 3; ++s) row ^= (1ull << sd.pants.slot_cuff[p][s]);
        rows.push_back(row);
    }
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r] & (1ull << col)) {
                piv = static_cast<int>(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r)
            if (static_cast<int>(r) != rank && (rows[r] & (1ull << col))) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

Rational leading_coefficient(const SurfaceData& sd) {
    const int n = sd.surface.num_cuffs();
    Rational vol(1);
    for (int k = 1; k <= 2 * n; ++k) vol /= k;          // simplex volume 1/(2n)!
    vol *= boost::multiprecision::pow(boost::multiprecision::cpp_int(2), n);  // t sign patterns
    Rational density = Rational(1) /
                       boost::multiprecision::pow(boost::multiprecision::cpp_int(2), parity_rank(sd));
    return vol * density;
}

}  // namespace mcv
