#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace peri {

/// A Brauer diagram from `src` bottom dots to `tgt` top dots: a perfect
/// matching on the src+tgt dots. Dots are encoded 0..src-1 (bottom, left to
/// right) and src..src+tgt-1 (top, left to right). Pairs are stored sorted so
/// equality is structural.
struct BrauerDiagram {
    int src = 0;
    int tgt = 0;
    std::vector<std::pair<int, int>> pairs;

    bool is_top(int dot) const { return dot >= src; }
    int line_pos(int dot) const { return dot < src ? dot : dot - src; }

    void canonicalize() {
        for (auto& p : pairs)
            if (p.first > p.second) std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
    }

    friend bool operator==(const BrauerDiagram& a, const BrauerDiagram& b) {
        return a.src == b.src && a.tgt == b.tgt && a.pairs == b.pairs;
    }
    friend bool operator<(const BrauerDiagram& a, const BrauerDiagram& b) {
        if (a.src != b.src) return a.src < b.src;
        if (a.tgt != b.tgt) return a.tgt < b.tgt;
        return a.pairs < b.pairs;
    }
};

inline BrauerDiagram make_diagram(int src, int tgt, std::vector<std::pair<int, int>> pairs) {
    BrauerDiagram d;
    d.src = src;
    d.tgt = tgt;
    d.pairs = std::move(pairs);
    d.canonicalize();
    if ((int)d.pairs.size() * 2 != src + tgt) throw std::runtime_error("not a perfect matching");
    return d;
}

inline int propagating_count(const BrauerDiagram& d) {
    int n = 0;
    for (auto& p : d.pairs)
        if (!d.is_top(p.first) && d.is_top(p.second)) ++n;
    return n;
}
inline int cup_count(const BrauerDiagram& d) {
    int n = 0;
    for (auto& p : d.pairs)
        if (d.is_top(p.first) && d.is_top(p.second)) ++n;
    return n;
}
inline int cap_count(const BrauerDiagram& d) {
    int n = 0;
    for (auto& p : d.pairs)
        if (!d.is_top(p.first) && !d.is_top(p.second)) ++n;
    return n;
}

/// A composition result: either Zero (a closed loop appeared) or a sign with
/// the underlying diagram.
struct SignedDiagram {
    int sign = 0; // 0 encodes Zero
    BrauerDiagram diagram;

    bool is_zero() const { return sign == 0; }
    static SignedDiagram zero() { return SignedDiagram{}; }
    static SignedDiagram of(int s, BrauerDiagram d) {
        SignedDiagram r;
        r.sign = s;
        r.diagram = std::move(d);
        return r;
    }
    friend bool operator==(const SignedDiagram& a, const SignedDiagram& b) {
        if (a.sign != b.sign) return false;
        return a.sign == 0 || a.diagram == b.diagram;
    }
};

/// Marking data of a cup (diamond) or cap (directed arrow), exposed mostly for
/// tests and serialization; composition uses the same ordering rules inline.
struct Marking {
    bool is_cup = false;
    std::pair<int, int> arc;  // dots of the cup/cap
    bool right_handed = true; // caps only
};

struct MarkedDiagram {
    BrauerDiagram diagram;
    std::vector<Marking> latitude_order; // highest first
};

/// Standard marking: all cups above all caps; cups ordered by leftmost left
/// endpoint (leftmost highest); caps by left endpoint, rightmost highest; all
/// caps right-handed.
inline MarkedDiagram standard_marking(const BrauerDiagram& d) {
    MarkedDiagram m;
    m.diagram = d;
    std::vector<std::pair<int, int>> cups, caps;
    for (auto& p : d.pairs) {
        if (d.is_top(p.first) && d.is_top(p.second)) cups.push_back(p);
        if (!d.is_top(p.first) && !d.is_top(p.second)) caps.push_back(p);
    }
    std::sort(cups.begin(), cups.end());
    std::sort(caps.begin(), caps.end(), [](auto& a, auto& b) { return a.first > b.first; });
    for (auto& c : cups) m.latitude_order.push_back(Marking{true, c, true});
    for (auto& c : caps) m.latitude_order.push_back(Marking{false, c, true});
    return m;
}

enum class NormStrategy { Stack, Reverse, Random };

namespace detail {

struct StackedEdge {
    int a, b;        // stacked dot indices, a < b
    int mark = -1;   // index into the mark table, -1 if unmarked
};

struct Mark {
    bool is_cup;     // diamond (cup of the lower diagram) vs arrow (cap of the upper)
    int edge;        // owning stacked edge
    bool alive = true;
};

/// Walk a non-loop component starting from boundary dot `start`; returns the
/// edges in traversal order and the terminal boundary dot.
inline int walk_component(int start, const std::vector<StackedEdge>& edges,
                          const std::vector<std::vector<int>>& incident,
                          std::vector<bool>& seen_edge, std::vector<int>& path,
                          std::vector<int>& dir) {
    int cur = start;
    int prev_edge = -1;
    for (;;) {
        int next_edge = -1;
        for (int e : incident[cur])
            if (e != prev_edge && !seen_edge[e]) next_edge = e;
        if (next_edge == -1) return cur;
        seen_edge[next_edge] = true;
        path.push_back(next_edge);
        const StackedEdge& ed = edges[next_edge];
        dir.push_back(cur == ed.a ? +1 : -1);
        cur = (cur == ed.a) ? ed.b : ed.a;
        prev_edge = next_edge;
    }
}

} // namespace detail

/// Composition d1 o d2 of an (j,k)-diagram d1 with an (i,j)-diagram d2:
/// stack d1 on top of d2. A closed loop gives Zero. Otherwise the sign is
/// computed by normalising the stacked marked diagram to the standard marking
/// of the composite: swapping two markings at adjacent latitudes costs -1;
/// cancelling a diamond against an arrow on the same strand costs -1 exactly
/// when the arrow points away from the diamond; reversing a surviving arrow
/// costs -1. The strategy picks the cancellation order; the result does not
/// depend on it.
inline SignedDiagram compose_with(const BrauerDiagram& d1, const BrauerDiagram& d2,
                                  NormStrategy strategy, std::mt19937_64* rng = nullptr) {
    if (d1.src != d2.tgt) throw std::runtime_error("compose: arity mismatch");
    const int i = d2.src, j = d2.tgt, k = d1.tgt;
    const int nb = i, nm = j, nt = k;
    const int total = nb + nm + nt;

    using detail::StackedEdge;
    using detail::Mark;

    std::vector<StackedEdge> edges;
    edges.reserve((std::size_t)(i + j + j + k) / 2);
    std::vector<Mark> marks;

    // lower diagram d2: bottom dots map to 0..i-1, top dots to i..i+j-1
    std::vector<int> d2cup_edges, d2cap_edges, d1cup_edges, d1cap_edges;
    for (auto& p : d2.pairs) {
        StackedEdge e{p.first, p.second};
        int id = (int)edges.size();
        bool atop = p.first >= i, btop = p.second >= i;
        if (atop && btop) d2cup_edges.push_back(id);
        if (!atop && !btop) d2cap_edges.push_back(id);
        edges.push_back(e);
    }
    // upper diagram d1: bottom dots map to i..i+j-1, tops to i+j..i+j+k-1
    for (auto& p : d1.pairs) {
        auto lift = [&](int x) { return x < j ? i + x : i + j + (x - j); };
        StackedEdge e{lift(p.first), lift(p.second)};
        int id = (int)edges.size();
        bool atop = p.first >= j, btop = p.second >= j;
        if (atop && btop) d1cup_edges.push_back(id);
        if (!atop && !btop) d1cap_edges.push_back(id);
        edges.push_back(e);
    }

    // latitude order, highest first: cups of d1, caps of d1, cups of d2, caps of d2
    std::vector<int> seq; // mark ids
    auto add_marks = [&](std::vector<int>& es, bool is_cup, bool leftmost_first) {
        std::sort(es.begin(), es.end(), [&](int x, int y) {
            return leftmost_first ? edges[x].a < edges[y].a : edges[x].a > edges[y].a;
        });
        for (int e : es) {
            edges[e].mark = (int)marks.size();
            seq.push_back((int)marks.size());
            marks.push_back(Mark{is_cup, e});
        }
    };
    add_marks(d1cup_edges, true, true);
    add_marks(d1cap_edges, false, false);
    add_marks(d2cup_edges, true, true);
    add_marks(d2cap_edges, false, false);

    std::vector<std::vector<int>> incident(total);
    for (int e = 0; e < (int)edges.size(); ++e) {
        incident[edges[e].a].push_back(e);
        incident[edges[e].b].push_back(e);
    }

    auto is_boundary = [&](int dot) { return dot < nb || dot >= nb + nm; };

    // trace components from boundary dots
    std::vector<bool> seen((std::size_t)edges.size(), false);
    struct Strand {
        int end1, end2;
        std::vector<int> mark_list; // mark ids in traversal order
        std::vector<int> mark_dir;  // +1 traversal agrees with (a->b), arrows only
    };
    std::vector<Strand> strands;
    for (int dot = 0; dot < total; ++dot) {
        if (!is_boundary(dot)) continue;
        int e0 = incident[dot][0];
        if (seen[e0]) continue;
        std::vector<int> path, dir;
        int other = detail::walk_component(dot, edges, incident, seen, path, dir);
        Strand s;
        s.end1 = dot;
        s.end2 = other;
        for (std::size_t t = 0; t < path.size(); ++t) {
            int m = edges[path[t]].mark;
            if (m >= 0) {
                s.mark_list.push_back(m);
                s.mark_dir.push_back(dir[t]);
            }
        }
        strands.push_back(std::move(s));
    }
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!seen[e]) return SignedDiagram::zero(); // closed loop

    // canonical traversal orientation: from the left endpoint (cups/caps) or
    // from the bottom endpoint (propagating strands)
    for (auto& s : strands) {
        bool flip;
        bool top1 = s.end1 >= nb + nm, top2 = s.end2 >= nb + nm;
        bool bot1 = s.end1 < nb, bot2 = s.end2 < nb;
        if (bot1 && top2)
            flip = false;
        else if (top1 && bot2)
            flip = true;
        else
            flip = s.end1 > s.end2;
        if (flip) {
            std::swap(s.end1, s.end2);
            std::reverse(s.mark_list.begin(), s.mark_list.end());
            std::reverse(s.mark_dir.begin(), s.mark_dir.end());
            for (int& d : s.mark_dir) d = -d;
        }
    }

    int sign = 1;

    // cancellation phase
    struct Pair {
        int strand, arrow_idx, diamond_idx;
    };
    auto eligible_pairs = [&]() {
        std::vector<Pair> out;
        for (int si = 0; si < (int)strands.size(); ++si) {
            auto& lst = strands[si].mark_list;
            for (int t = 0; t + 1 < (int)lst.size(); ++t) {
                bool c0 = marks[lst[t]].is_cup, c1 = marks[lst[t + 1]].is_cup;
                if (c0 && !c1) out.push_back(Pair{si, t + 1, t});
                if (!c0 && c1) out.push_back(Pair{si, t, t + 1});
            }
        }
        return out;
    };

    auto pos_in_seq = [&](int m) {
        for (int p = 0; p < (int)seq.size(); ++p)
            if (seq[p] == m) return p;
        return -1;
    };

    for (;;) {
        auto cands = eligible_pairs();
        if (cands.empty()) break;
        Pair pick = cands.front();
        if (strategy == NormStrategy::Reverse)
            pick = cands.back();
        else if (strategy == NormStrategy::Random && rng)
            pick = cands[(*rng)() % cands.size()];
        auto& st = strands[pick.strand];
        int arrow = st.mark_list[pick.arrow_idx];
        int diamond = st.mark_list[pick.diamond_idx];
        int pa = pos_in_seq(arrow), pd = pos_in_seq(diamond);
        assert(pa >= 0 && pd >= 0 && pa < pd); // the arrow sits above the diamond
        int between = pd - pa - 1;
        if (between & 1) sign = -sign;
        int adir = st.mark_dir[pick.arrow_idx];
        bool diamond_behind = pick.diamond_idx < pick.arrow_idx;
        bool away = diamond_behind ? (adir == +1) : (adir == -1);
        if (away) sign = -sign;
        // remove both marks
        seq.erase(seq.begin() + pd);
        seq.erase(seq.begin() + pa);
        int hi = std::max(pick.arrow_idx, pick.diamond_idx);
        int lo = std::min(pick.arrow_idx, pick.diamond_idx);
        st.mark_list.erase(st.mark_list.begin() + hi);
        st.mark_dir.erase(st.mark_dir.begin() + hi);
        st.mark_list.erase(st.mark_list.begin() + lo);
        st.mark_dir.erase(st.mark_dir.begin() + lo);
    }

    // surviving arrows: reverse to right-handed where needed
    for (auto& st : strands) {
        bool is_cap = st.end1 < nb && st.end2 < nb;
        bool is_cupc = st.end1 >= nb + nm && st.end2 >= nb + nm;
        if (is_cap) {
            assert(st.mark_list.size() == 1 && !marks[st.mark_list[0]].is_cup);
            if (st.mark_dir[0] == -1) sign = -sign;
        } else if (is_cupc) {
            assert(st.mark_list.size() == 1 && marks[st.mark_list[0]].is_cup);
        } else {
            assert(st.mark_list.empty());
        }
    }

    // permutation to the composite's standard order
    std::vector<std::pair<int, int>> order_key; // (rank key, mark id)
    {
        std::vector<std::pair<int, int>> cup_strands, cap_strands; // (left endpoint, mark)
        for (auto& st : strands) {
            if (st.mark_list.empty()) continue;
            int m = st.mark_list[0];
            if (marks[m].is_cup)
                cup_strands.push_back({st.end1, m});
            else
                cap_strands.push_back({st.end1, m});
        }
        std::sort(cup_strands.begin(), cup_strands.end());
        std::sort(cap_strands.begin(), cap_strands.end(),
                  [](auto& a, auto& b) { return a.first > b.first; });
        std::vector<int> target;
        for (auto& c : cup_strands) target.push_back(c.second);
        for (auto& c : cap_strands) target.push_back(c.second);
        std::vector<int> rank_of(marks.size(), -1);
        for (int r = 0; r < (int)target.size(); ++r) rank_of[target[r]] = r;
        assert(seq.size() == target.size());
        int inv = 0;
        for (std::size_t a = 0; a < seq.size(); ++a)
            for (std::size_t b = a + 1; b < seq.size(); ++b)
                if (rank_of[seq[a]] > rank_of[seq[b]]) ++inv;
        if (inv & 1) sign = -sign;
        (void)order_key;
    }

    // assemble the composite diagram
    BrauerDiagram out;
    out.src = i;
    out.tgt = k;
    auto to_out = [&](int dot) { return dot < nb ? dot : i + (dot - nb - nm); };
    for (auto& st : strands) out.pairs.push_back({to_out(st.end1), to_out(st.end2)});
    out.canonicalize();
    return SignedDiagram::of(sign, out);
}

inline SignedDiagram compose(const BrauerDiagram& d1, const BrauerDiagram& d2) {
    return compose_with(d1, d2, NormStrategy::Stack);
}

inline SignedDiagram compose(const SignedDiagram& d1, const SignedDiagram& d2) {
    if (d1.is_zero() || d2.is_zero()) return SignedDiagram::zero();
    SignedDiagram r = compose(d1.diagram, d2.diagram);
    r.sign *= d1.sign * d2.sign;
    return r;
}

/// Horizontal juxtaposition; the right factor's dots shift right of the left's.
inline BrauerDiagram tensor(const BrauerDiagram& a, const BrauerDiagram& b) {
    BrauerDiagram out;
    out.src = a.src + b.src;
    out.tgt = a.tgt + b.tgt;
    auto lift_a = [&](int x) { return x < a.src ? x : out.src + (x - a.src); };
    auto lift_b = [&](int x) {
        return x < b.src ? a.src + x : out.src + a.tgt + (x - b.src);
    };
    for (auto& p : a.pairs) out.pairs.push_back({lift_a(p.first), lift_a(p.second)});
    for (auto& p : b.pairs) out.pairs.push_back({lift_b(p.first), lift_b(p.second)});
    out.canonicalize();
    return out;
}

/// The vertical mirror as a bare diagram (no sign); see `flip` for the
/// anti-equivalence.
inline BrauerDiagram mirror(const BrauerDiagram& d) {
    BrauerDiagram out;
    out.src = d.tgt;
    out.tgt = d.src;
    auto mv = [&](int x) { return x < d.src ? d.tgt + x : x - d.src; };
    for (auto& p : d.pairs) out.pairs.push_back({mv(p.first), mv(p.second)});
    out.canonicalize();
    return out;
}

// ---- elementary slices and diagram factorisation ----

inline BrauerDiagram cross_slice(int w, int p) {
    BrauerDiagram d;
    d.src = d.tgt = w;
    for (int q = 0; q < w; ++q) {
        int t = q == p ? p + 1 : q == p + 1 ? p : q;
        d.pairs.push_back({q, w + t});
    }
    d.canonicalize();
    return d;
}

inline BrauerDiagram cup_slice(int w, int p) { // Hom(w, w+2), cup at top p,p+1
    BrauerDiagram d;
    d.src = w;
    d.tgt = w + 2;
    for (int q = 0; q < w; ++q) d.pairs.push_back({q, w + (q < p ? q : q + 2)});
    d.pairs.push_back({w + p, w + p + 1});
    d.canonicalize();
    return d;
}

inline BrauerDiagram cap_slice(int w, int p) { // Hom(w+2, w), cap at bottom p,p+1
    BrauerDiagram d;
    d.src = w + 2;
    d.tgt = w;
    for (int q = 0; q < w; ++q) d.pairs.push_back({q < p ? q : q + 2, w + 2 + q});
    d.pairs.push_back({p, p + 1});
    d.canonicalize();
    return d;
}

struct Slice {
    enum Kind { Cross, Cup, Cap } kind;
    int width; // width below the slice
    int pos;
    BrauerDiagram diagram() const {
        switch (kind) {
            case Cross: return cross_slice(width, pos);
            case Cup: return cup_slice(width, pos);
            default: return cap_slice(width - 2, pos);
        }
    }
    Slice mirrored() const {
        switch (kind) {
            case Cross: return {Cross, width, pos};
            case Cup: return {Cap, width + 2, pos};
            default: return {Cup, width - 2, pos};
        }
    }
};

/// Factor d into elementary slices, listed bottom-up: composing the returned
/// slices (last on top) reproduces d up to the returned sign.
inline std::pair<int, std::vector<Slice>> slice_factorization(const BrauerDiagram& d) {
    std::vector<Slice> slices;
    // labels: propagating strands carry their bottom dot; cup legs carry
    // (src + 2*cup_index + side)
    std::vector<std::pair<int, int>> cups, caps;
    std::vector<std::pair<int, int>> props; // (bottom dot, top dot)
    for (auto& p : d.pairs) {
        if (d.is_top(p.first) && d.is_top(p.second)) cups.push_back(p);
        else if (!d.is_top(p.first) && !d.is_top(p.second)) caps.push_back(p);
        else props.push_back(p);
    }
    std::sort(cups.begin(), cups.end());
    std::sort(caps.begin(), caps.end());

    std::vector<int> active;
    for (int q = 0; q < d.src; ++q) active.push_back(q);
    auto pos_of = [&](int label) {
        return (int)(std::find(active.begin(), active.end(), label) - active.begin());
    };

    for (auto& cp : caps) {
        int p = pos_of(cp.first), q = pos_of(cp.second);
        assert(p < q);
        for (int t = q - 1; t > p; --t) {
            slices.push_back({Slice::Cross, (int)active.size(), t});
            std::swap(active[t], active[t + 1]);
        }
        slices.push_back({Slice::Cap, (int)active.size(), p});
        active.erase(active.begin() + p, active.begin() + p + 2);
    }
    for (std::size_t c = 0; c < cups.size(); ++c) {
        slices.push_back({Slice::Cup, (int)active.size(), (int)active.size()});
        active.push_back(d.src + 2 * (int)c);
        active.push_back(d.src + 2 * (int)c + 1);
    }
    // target labels for the top line, left to right
    std::vector<int> target(d.tgt, -1);
    for (auto& pr : props) target[pr.second - d.src] = pr.first;
    for (std::size_t c = 0; c < cups.size(); ++c) {
        target[cups[c].first - d.src] = d.src + 2 * (int)c;
        target[cups[c].second - d.src] = d.src + 2 * (int)c + 1;
    }
    assert((int)active.size() == d.tgt);
    for (int t = 0; t < d.tgt; ++t) {
        if (active[t] == target[t]) continue;
        int q = pos_of(target[t]);
        for (int s = q - 1; s >= t; --s) {
            slices.push_back({Slice::Cross, (int)active.size(), s});
            std::swap(active[s], active[s + 1]);
        }
    }

    // compose everything to pin the factorisation sign
    int sign;
    if (slices.empty()) {
        sign = 1;
    } else {
        SignedDiagram cur = SignedDiagram::of(1, slices[0].diagram());
        for (std::size_t t = 1; t < slices.size(); ++t)
            cur = compose(SignedDiagram::of(1, slices[t].diagram()), cur);
        assert(!cur.is_zero() && cur.diagram == d);
        sign = cur.sign;
    }
    return {sign, slices};
}

/// The contravariant anti-equivalence on a basis diagram: identity and caps
/// are fixed, crossings and cups each contribute -1, and the underlying
/// diagram is the vertical mirror.
inline SignedDiagram flip(const BrauerDiagram& d) {
    auto [s0, slices] = slice_factorization(d);
    int sgn = s0;
    for (auto& s : slices)
        if (s.kind != Slice::Cap) sgn = -sgn;
    if (slices.empty()) return SignedDiagram::of(sgn, mirror(d));
    SignedDiagram cur = SignedDiagram::of(1, slices.back().mirrored().diagram());
    for (int t = (int)slices.size() - 2; t >= 0; --t)
        cur = compose(SignedDiagram::of(1, slices[t].mirrored().diagram()), cur);
    assert(!cur.is_zero() && cur.diagram == mirror(d));
    return SignedDiagram::of(sgn * cur.sign, cur.diagram);
}

// ---- named diagrams ----

inline BrauerDiagram identity_diagram(int n) {
    BrauerDiagram d;
    d.src = d.tgt = n;
    for (int q = 0; q < n; ++q) d.pairs.push_back({q, n + q});
    return d;
}

/// The transposition (j,i) in S_n as a diagram; 1-based indices.
inline BrauerDiagram transposition(int j, int i, int n) {
    if (j > i) std::swap(j, i);
    if (!(1 <= j && j < i && i <= n)) throw std::runtime_error("transposition: bad indices");
    BrauerDiagram d;
    d.src = d.tgt = n;
    for (int q = 1; q <= n; ++q) {
        int t = q == j ? i : q == i ? j : q;
        d.pairs.push_back({q - 1, n + t - 1});
    }
    d.canonicalize();
    return d;
}

/// The "bar" transposition: cup and cap joining the i-th and j-th dots.
inline BrauerDiagram bar_transposition(int j, int i, int n) {
    if (j > i) std::swap(j, i);
    if (!(1 <= j && j < i && i <= n)) throw std::runtime_error("bar_transposition: bad indices");
    BrauerDiagram d;
    d.src = d.tgt = n;
    for (int q = 1; q <= n; ++q)
        if (q != j && q != i) d.pairs.push_back({q - 1, n + q - 1});
    d.pairs.push_back({j - 1, i - 1});
    d.pairs.push_back({n + j - 1, n + i - 1});
    d.canonicalize();
    return d;
}

inline BrauerDiagram epsilon(int k, int n) { return bar_transposition(k, k + 1, n); }
inline BrauerDiagram s_gen(int k, int n) { return transposition(k, k + 1, n); }

/// a_i in Hom(i, n): i straight lines and cups on the remaining top dots.
inline BrauerDiagram a_diagram(int i, int n) {
    if (i < 0 || i > n || (n - i) % 2) throw std::runtime_error("a_diagram: bad arity");
    BrauerDiagram d;
    d.src = i;
    d.tgt = n;
    for (int q = 0; q < i; ++q) d.pairs.push_back({q, i + q});
    for (int q = i; q < n; q += 2) d.pairs.push_back({i + q, i + q + 1});
    d.canonicalize();
    return d;
}

/// b_i in Hom(n, i): i-1 straight lines, caps on dots i..n-1, and the last
/// bottom dot propagating to the i-th top dot. b_0 is the all-caps diagram.
inline BrauerDiagram b_diagram(int i, int n) {
    if (i < 0 || i > n || (n - i) % 2) throw std::runtime_error("b_diagram: bad arity");
    BrauerDiagram d;
    d.src = n;
    d.tgt = i;
    if (i == 0) {
        for (int q = 0; q < n; q += 2) d.pairs.push_back({q, q + 1});
    } else {
        for (int q = 1; q < i; ++q) d.pairs.push_back({q - 1, n + q - 1});
        for (int q = i; q < n - 1; q += 2) d.pairs.push_back({q - 1, q});
        d.pairs.push_back({n - 1, n + i - 1});
    }
    d.canonicalize();
    return d;
}

/// c_i^* = a_i b_i in A_n, constructed directly.
inline BrauerDiagram c_star(int i, int n) {
    if (i < 0 || i > n || (n - i) % 2) throw std::runtime_error("c_star: bad arity");
    BrauerDiagram d;
    d.src = d.tgt = n;
    if (i == 0) {
        for (int q = 0; q < n; q += 2) d.pairs.push_back({q, q + 1});
        for (int q = 0; q < n; q += 2) d.pairs.push_back({n + q, n + q + 1});
    } else {
        for (int q = 1; q < i; ++q) d.pairs.push_back({q - 1, n + q - 1});
        for (int q = i; q < n - 1; q += 2) d.pairs.push_back({q - 1, q});
        d.pairs.push_back({n - 1, n + i - 1});
        for (int q = i; q < n; q += 2) d.pairs.push_back({n + q, n + q + 1});
    }
    d.canonicalize();
    return d;
}

/// w: cup {1,2} on top, cap {2,3} on the bottom, dot 1 propagating to dot 3.
inline BrauerDiagram w_diagram(int n) {
    if (n < 3) throw std::runtime_error("w_diagram: n >= 3 required");
    BrauerDiagram d;
    d.src = d.tgt = n;
    d.pairs.push_back({0, n + 2});
    d.pairs.push_back({1, 2});
    d.pairs.push_back({n + 0, n + 1});
    for (int q = 3; q < n; ++q) d.pairs.push_back({q, n + q});
    d.canonicalize();
    return d;
}

/// y_1: straight lines on 1,2; cup {3,4} on top; dot 3 to top 5, dot n to top
/// 6; caps {4,5},...,{n-2,n-1}; cups {7,8},... on top.
inline BrauerDiagram y1_diagram(int n) {
    if (n < 6 || n % 2) throw std::runtime_error("y1_diagram: even n >= 6 required");
    BrauerDiagram d;
    d.src = d.tgt = n;
    d.pairs.push_back({0, n + 0});
    d.pairs.push_back({1, n + 1});
    d.pairs.push_back({2, n + 4});
    d.pairs.push_back({n - 1, n + 5});
    for (int q = 3; q + 1 < n - 1; q += 2) d.pairs.push_back({q, q + 1});
    d.pairs.push_back({n + 2, n + 3});
    for (int q = 6; q < n; q += 2) d.pairs.push_back({n + q, n + q + 1});
    d.canonicalize();
    return d;
}

/// y_2: cup {1,2} on top; dots 1,2,3 to tops 3,4,5; dot n to top 6; caps and
/// cups as in y_1.
inline BrauerDiagram y2_diagram(int n) {
    if (n < 6 || n % 2) throw std::runtime_error("y2_diagram: even n >= 6 required");
    BrauerDiagram d;
    d.src = d.tgt = n;
    d.pairs.push_back({n + 0, n + 1});
    d.pairs.push_back({0, n + 2});
    d.pairs.push_back({1, n + 3});
    d.pairs.push_back({2, n + 4});
    d.pairs.push_back({n - 1, n + 5});
    for (int q = 3; q + 1 < n - 1; q += 2) d.pairs.push_back({q, q + 1});
    for (int q = 6; q < n; q += 2) d.pairs.push_back({n + q, n + q + 1});
    d.canonicalize();
    return d;
}

/// d in Hom(n, n-2): n-2 straight lines and a cap on the last two dots.
inline BrauerDiagram cap_d_diagram(int n) {
    if (n < 2) throw std::runtime_error("cap_d_diagram: n >= 2 required");
    BrauerDiagram d;
    d.src = n;
    d.tgt = n - 2;
    for (int q = 0; q < n - 2; ++q) d.pairs.push_back({q, n + q});
    d.pairs.push_back({n - 2, n - 1});
    d.canonicalize();
    return d;
}

/// All (i,j)-Brauer diagrams, in a fixed order. Empty when i+j is odd.
inline std::vector<BrauerDiagram> hom_basis(int i, int j) {
    std::vector<BrauerDiagram> out;
    if ((i + j) % 2) return out;
    int total = i + j;
    std::vector<int> partner(total, -1);
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        while (a < total && partner[a] >= 0) ++a;
        if (a == total) {
            BrauerDiagram d;
            d.src = i;
            d.tgt = j;
            d.pairs = cur;
            d.canonicalize();
            out.push_back(std::move(d));
            return;
        }
        for (int b = a + 1; b < total; ++b) {
            if (partner[b] >= 0) continue;
            partner[a] = b;
            partner[b] = a;
            cur.push_back({a, b});
            self(self);
            cur.pop_back();
            partner[a] = partner[b] = -1;
        }
    };
    rec(rec);
    return out;
}

/// Permutation extraction: if d in Hom(m,m) is a pure permutation, the vector
/// p with bottom q joined to top p[q].
inline std::optional<std::vector<int>> as_permutation(const BrauerDiagram& d) {
    if (d.src != d.tgt) return std::nullopt;
    std::vector<int> p(d.src, -1);
    for (auto& pr : d.pairs) {
        if (d.is_top(pr.first) || !d.is_top(pr.second)) return std::nullopt;
        p[pr.first] = pr.second - d.src;
    }
    return p;
}

/// Embedding A_k -> A_n, d -> d tensor identity.
inline BrauerDiagram embed(const BrauerDiagram& d, int n) {
    assert(d.src == d.tgt && d.src <= n);
    return tensor(d, identity_diagram(n - d.src));
}

inline std::string dot_name(const BrauerDiagram& d, int dot) {
    if (dot < d.src) return "B" + std::to_string(dot + 1);
    return "T" + std::to_string(dot - d.src + 1);
}

} // namespace peri
