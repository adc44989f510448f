#include "multicurve/train_track.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mcv {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// reduced row echelon; returns rank
int eliminate(Matrix& a) {
    if (a.empty()) return 0;
    const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rational inv = a[rank][col];
        for (auto& x : a[rank]) x /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int cc = 0; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

Matrix switch_condition_matrix(const TrainTrack& tt) {
    Matrix a(tt.switches.size(), std::vector<Rational>(tt.num_branches, 0));
    for (size_t s = 0; s < tt.switches.size(); ++s) {
        a[s][tt.switches[s].e1.branch] += 1;
        a[s][tt.switches[s].e2.branch] += 1;
        a[s][tt.switches[s].out.branch] -= 1;
    }
    return a;
}

}  // namespace

void TrainTrack::check_well_formed() const {
    std::vector<int> uses(num_branches * 2, 0);
    auto mark = [&](BranchEnd e) {
        if (e.branch < 0 || e.branch >= num_branches || e.end < 0 || e.end > 1)
            throw std::invalid_argument("train track: branch end out of range");
        uses[e.branch * 2 + e.end] += 1;
    };
    for (const auto& s : switches) {
        mark(s.e1);
        mark(s.e2);
        mark(s.out);
    }
    std::vector<bool> loop(num_branches, false);
    for (int b : free_loops) loop[b] = true;
    for (int b = 0; b < num_branches; ++b) {
        int expect = loop[b] ? 0 : 1;
        if (uses[b * 2] != expect || uses[b * 2 + 1] != expect)
            throw std::invalid_argument("train track: branch " + std::to_string(b) +
                                        " has dangling or repeated ends");
    }
}

bool TrainTrack::orientable() const {
    // variables: direction bit per branch and parity bit per switch, joined
    // by parity constraints; contradiction <=> non-orientable
    const int nb = num_branches, ns = static_cast<int>(switches.size());
    std::vector<int> parent(nb + ns), rel(nb + ns, 0);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
        if (parent[x] == x) return {x, 0};
        auto [r, p] = find(parent[x]);
        parent[x] = r;
        rel[x] ^= p;
        return {r, rel[x]};
    };
    auto unite = [&](int a, int b, int parity) -> bool {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == parity;
        parent[ra] = rb;
        rel[ra] = pa ^ pb ^ parity;
        return true;
    };
    for (int s = 0; s < ns; ++s) {
        auto constrain = [&](BranchEnd e, int into_switch) {
            // branch direction bit: 0 = runs end0 -> end1
            int dir_into = e.end == 1 ? 0 : 1;
            return unite(e.branch, nb + s, dir_into ^ 1 ^ into_switch);
        };
        if (!constrain(switches[s].e1, 1)) return false;
        if (!constrain(switches[s].e2, 1)) return false;
        if (!constrain(switches[s].out, 0)) return false;
    }
    return true;
}

bool TrainTrack::type_vector_consistent() const {
    if (polygon_sides.empty()) return true;
    int64_t total = 0;
    for (int a : polygon_sides) total += a;
    return total == 4 * genus - 4 + 2 * static_cast<int64_t>(polygon_sides.size());
}

bool validate_switch_conditions(const TrainTrack& tt, const WeightVector& wv) {
    if (static_cast<int>(wv.w.size()) != tt.num_branches)
        throw std::invalid_argument("weight vector has wrong length");
    for (const auto& s : tt.switches)
        if (wv.w[s.e1.branch] + wv.w[s.e2.branch] != wv.w[s.out.branch]) return false;
    return true;
}

DimResult weight_space_dim(const TrainTrack& tt) {
    Matrix a = switch_condition_matrix(tt);
    int rank = eliminate(a);
    return {tt.num_branches - rank, !tt.filling};
}

Rational thurston_form(const TrainTrack& tt, const WeightVector& u, const WeightVector& v) {
    if (tt.switches.empty()) throw std::domain_error("thurston_form: track is not maximal");
    if (static_cast<int>(u.w.size()) != tt.num_branches ||
        static_cast<int>(v.w.size()) != tt.num_branches)
        throw std::invalid_argument("weight vector has wrong length");
    Rational acc = 0;
    for (const auto& s : tt.switches)
        acc += u.w[s.e1.branch] * v.w[s.e2.branch] - u.w[s.e2.branch] * v.w[s.e1.branch];
    return acc / 2;
}

std::vector<WeightVector> weight_space_basis(const TrainTrack& tt) {
    Matrix a = switch_condition_matrix(tt);
    const int n = tt.num_branches;
    int rank = eliminate(a);
    // pivot columns
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < n; ++c)
            if (a[r][c] != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
    std::vector<WeightVector> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        WeightVector b;
        b.w.assign(n, 0);
        b.w[free] = 1;
        for (int r = 0; r < rank; ++r) b.w[pivot_col[r]] = -a[r][free];
        basis.push_back(std::move(b));
    }
    return basis;
}

int thurston_gram_rank(const TrainTrack& tt) {
    auto basis = weight_space_basis(tt);
    const int d = static_cast<int>(basis.size());
    Matrix gram(d, std::vector<Rational>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            gram[i][j] = thurston_form(tt, basis[i], basis[j]);
            gram[j][i] = -gram[i][j];
        }
    return eliminate(gram);
}

StandardTrack standard_track(const SurfaceData& sd, const std::vector<int>& orthant_signs) {
    const auto& pd = sd.pants;
    const int nc = pd.num_cuffs(), np = pd.num_pants();
    if (static_cast<int>(orthant_signs.size()) != nc)
        throw std::invalid_argument("standard_track: orthant has wrong length");
    for (int s : orthant_signs)
        if (s != 1 && s != -1) throw std::invalid_argument("standard_track: signs must be +-1");

    StandardTrack st;
    st.orthant = orthant_signs;
    TrainTrack& tt = st.track;
    tt.genus = sd.surface.genus;
    tt.filling = true;

    auto new_branch = [&]() { return tt.num_branches++; };
    st.plug0.resize(nc);
    st.plug1.resize(nc);
    st.alpha.resize(nc);
    st.beta.resize(nc);
    st.seam.resize(np);
    for (int i = 0; i < nc; ++i) {
        st.plug0[i] = new_branch();
        st.plug1[i] = new_branch();
        st.alpha[i] = new_branch();
        st.beta[i] = new_branch();
    }
    for (int p = 0; p < np; ++p)
        for (int k = 0; k < 3; ++k) st.seam[p][k] = new_branch();

    // cuff gadgets: merge switch M_i takes {plug0, beta} into alpha, split
    // switch S_i takes {plug1, beta} into alpha. For a plus twist the spiral
    // puts the side-0 plug on the right at M and the side-1 plug on the
    // right at S; the minus spiral mirrors both.
    for (int i = 0; i < nc; ++i) {
        BranchEnd p0{st.plug0[i], 0}, p1{st.plug1[i], 0};
        BranchEnd a0{st.alpha[i], 0}, a1{st.alpha[i], 1};
        BranchEnd b0{st.beta[i], 0}, b1{st.beta[i], 1};
        if (orthant_signs[i] > 0) {
            tt.switches.push_back({p0, b0, a0});
            tt.switches.push_back({p1, b1, a1});
        } else {
            tt.switches.push_back({b0, p0, a0});
            tt.switches.push_back({b1, p1, a1});
        }
    }
    // pants triangles: at slot a, the two seams meeting a feed the plug
    for (int p = 0; p < np; ++p)
        for (int a = 0; a < 3; ++a) {
            int next = (a + 1) % 3, prev = (a + 2) % 3;
            int to_next = st.seam[p][3 - a - next];  // seam joining a and next(a)
            int to_prev = st.seam[p][3 - a - prev];
            // seam branch ends: end0 at the lower-indexed slot's switch
            auto seam_end = [&](int seam_branch, int slot) -> BranchEnd {
                int k = -1;
                for (int kk = 0; kk < 3; ++kk)
                    if (st.seam[p][kk] == seam_branch) k = kk;
                int lo = std::min((k + 1) % 3, (k + 2) % 3);
                return {seam_branch, slot == lo ? 0 : 1};
            };
            int cuff = pd.slot_cuff[p][a];
            int side = pd.side_of({p, a});
            int plug = side == 0 ? st.plug0[cuff] : st.plug1[cuff];
            tt.switches.push_back({seam_end(to_next, a), seam_end(to_prev, a), {plug, 1}});
        }
    tt.check_well_formed();

    // complement of the standard family: 4g-4 trigons
    tt.polygon_sides.assign(4 * sd.surface.genus - 4, 3);

    // linear map on (m_1..m_n, |t_1|..|t_n|)
    st.map.assign(tt.num_branches, std::vector<Rational>(2 * nc, 0));
    for (int i = 0; i < nc; ++i) {
        st.map[st.plug0[i]][i] = 1;
        st.map[st.plug1[i]][i] = 1;
        st.map[st.alpha[i]][i] = 1;
        st.map[st.alpha[i]][nc + i] = 1;
        st.map[st.beta[i]][nc + i] = 1;
    }
    for (int p = 0; p < np; ++p) {
        int64_t cuff_of[3];
        for (int s = 0; s < 3; ++s) cuff_of[s] = pd.slot_cuff[p][s];
        for (int k = 0; k < 3; ++k) {
            // seam k joins slots (k+1)%3 and (k+2)%3: weight (m_u + m_v - m_k)/2
            int u = (k + 1) % 3, v = (k + 2) % 3;
            st.map[st.seam[p][k]][cuff_of[u]] += Rational(1, 2);
            st.map[st.seam[p][k]][cuff_of[v]] += Rational(1, 2);
            st.map[st.seam[p][k]][cuff_of[k]] -= Rational(1, 2);
        }
    }
    return st;
}

WeightVector StandardTrack::apply(const DTCoordinates& c) const {
    const int nc = static_cast<int>(orthant.size());
    for (int i = 0; i < nc; ++i)
        if (c.t[i] * orthant[i] < 0)
            throw std::domain_error("standard_track map: coordinates outside the chart orthant");
    std::vector<Rational> v(2 * nc);
    for (int i = 0; i < nc; ++i) {
        v[i] = c.m[i];
        v[nc + i] = c.t[i] * orthant[i];
    }
    WeightVector out;
    out.w.assign(track.num_branches, 0);
    for (int b = 0; b < track.num_branches; ++b)
        for (int j = 0; j < 2 * nc; ++j)
            if (map[b][j] != 0) out.w[b] += map[b][j] * v[j];
    return out;
}

WeightVector StandardTrack::positive_witness(const SurfaceData& sd) const {
    DTCoordinates c;
    c.m.assign(sd.surface.num_cuffs(), 2);
    c.t.resize(sd.surface.num_cuffs());
    for (int i = 0; i < sd.surface.num_cuffs(); ++i) c.t[i] = orthant[i];
    return apply(c);
}

bool is_positive_certificate(const TrainTrack& tt, const WeightVector& wv) {
    if (!validate_switch_conditions(tt, wv)) return false;
    for (const auto& x : wv.w)
        if (x <= 0) return false;
    return true;
}

std::string track_json(const TrainTrack& tt) {
    nlohmann::json j;
    j["num_branches"] = tt.num_branches;
    nlohmann::json sw = nlohmann::json::array();
    for (const auto& s : tt.switches)
        sw.push_back({{"e1", {s.e1.branch, s.e1.end}},
                      {"e2", {s.e2.branch, s.e2.end}},
                      {"out", {s.out.branch, s.out.end}}});
    j["switches"] = sw;
    j["free_loops"] = tt.free_loops;
    j["type_vector"] = tt.polygon_sides;
    j["filling"] = tt.filling;
    j["orientable"] = tt.orientable();
    return j.dump(2);
}

WeightVector parse_weight_list(const std::string& text, int num_branches) {
    WeightVector wv;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto slash = tok.find('/');
        if (slash == std::string::npos)
            wv.w.emplace_back(boost::multiprecision::cpp_int(tok));
        else
            wv.w.emplace_back(boost::multiprecision::cpp_int(tok.substr(0, slash)),
                              boost::multiprecision::cpp_int(tok.substr(slash + 1)));
    }
    if (static_cast<int>(wv.w.size()) != num_branches)
        throw std::invalid_argument("expected " + std::to_string(num_branches) + " weights");
    return wv;
}

}  // namespace mcv
