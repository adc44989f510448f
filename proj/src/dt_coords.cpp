#include "multicurve/dt_coords.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace mcv {

namespace {

std::vector<int64_t> parse_int_list(const std::string& part) {
    std::vector<int64_t> out;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer in coordinates: '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("bad integer in coordinates: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace

DTCoordinates parse_coords(const std::string& text, int num_cuffs) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("coordinates must look like \"m1,..,mk;t1,..,tk\"");
    DTCoordinates c;
    c.m = parse_int_list(text.substr(0, semi));
    c.t = parse_int_list(text.substr(semi + 1));
    if (static_cast<int>(c.m.size()) != num_cuffs || static_cast<int>(c.t.size()) != num_cuffs)
        throw std::invalid_argument("expected " + std::to_string(num_cuffs) +
                                    " intersection and twist entries");
    return c;
}

std::string format_coords(const DTCoordinates& c) {
    std::string out;
    for (size_t i = 0; i < c.m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.m[i]);
    }
    out += ';';
    for (size_t i = 0; i < c.t.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c.t[i]);
    }
    return out;
}

Validity validate(const SurfaceData& sd, const DTCoordinates& c) {
    const int n = sd.surface.num_cuffs();
    if (static_cast<int>(c.m.size()) != n || static_cast<int>(c.t.size()) != n)
        return {false, "dimension mismatch: expected " + std::to_string(n) + " cuffs"};
    for (int i = 0; i < n; ++i)
        if (c.m[i] < 0) return {false, "m" + std::to_string(i + 1) + " is negative"};
    for (int p = 0; p < sd.pants.num_pants(); ++p) {
        int64_t sum = 0;
        for (int s = 0; s < 3; ++s) sum += c.m[sd.pants.slot_cuff[p][s]];
        if (sum % 2 != 0)
            return {false, "parity: pants " + std::to_string(p) + " has odd boundary sum " +
                               std::to_string(sum)};
    }
    for (int i = 0; i < n; ++i)
        if (c.m[i] == 0 && c.t[i] < 0)
            return {false, "m" + std::to_string(i + 1) + "=0 requires t" + std::to_string(i + 1) +
                               " >= 0"};
    return {true, ""};
}

int64_t norm(const DTCoordinates& c) {
    int64_t s = 0;
    for (auto v : c.m) s += v;
    for (auto v : c.t) s += std::llabs(v);
    return s;
}

DTCoordinates twist_about_cuff(const DTCoordinates& c, int cuff, int64_t n) {
    DTCoordinates out = c;
    out.t[cuff] += n * out.m[cuff];
    return out;
}

DTCoordinates coordinate_add(const SurfaceData& sd, const DTCoordinates& x, const DTCoordinates& y) {
    Validity vx = validate(sd, x), vy = validate(sd, y);
    if (!vx.ok) throw std::domain_error("coordinate_add: left operand invalid: " + vx.reason);
    if (!vy.ok) throw std::domain_error("coordinate_add: right operand invalid: " + vy.reason);
    for (size_t i = 0; i < x.t.size(); ++i)
        if (x.t[i] * y.t[i] < 0)
            throw std::domain_error("coordinate_add: operands lie in different twist-sign orthants (t" +
                                    std::to_string(i + 1) + ")");
    DTCoordinates out;
    out.m.resize(x.m.size());
    out.t.resize(x.t.size());
    for (size_t i = 0; i < x.m.size(); ++i) out.m[i] = x.m[i] + y.m[i];
    for (size_t i = 0; i < x.t.size(); ++i) out.t[i] = x.t[i] + y.t[i];
    return out;
}

DTCoordinates scale(const DTCoordinates& c, int64_t k) {
    DTCoordinates out = c;
    for (auto& v : out.m) v *= k;
    for (auto& v : out.t) v *= k;
    return out;
}

ArcCounts solve_arc_counts(int64_t ma, int64_t mb, int64_t mc) {
    if ((ma + mb + mc) % 2 != 0 || ma < 0 || mb < 0 || mc < 0)
        throw std::domain_error("solve_arc_counts: infeasible crossings");
    ArcCounts x{};
    const int64_t m[3] = {ma, mb, mc};
    int dominant = -1;
    for (int i = 0; i < 3; ++i)
        if (m[i] > m[(i + 1) % 3] + m[(i + 2) % 3]) dominant = i;
    if (dominant < 0) {
        x[0][1] = x[1][0] = (ma + mb - mc) / 2;
        x[0][2] = x[2][0] = (ma + mc - mb) / 2;
        x[1][2] = x[2][1] = (mb + mc - ma) / 2;
    } else {
        int a = dominant, b = (dominant + 1) % 3, c = (dominant + 2) % 3;
        x[a][a] = (m[a] - m[b] - m[c]) / 2;
        x[a][b] = x[b][a] = m[b];
        x[a][c] = x[c][a] = m[c];
    }
    return x;
}

}  // namespace mcv
