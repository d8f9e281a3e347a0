#include <algorithm>
#include <array>
#include <numeric>
#include <span>

#include "hacs/local_search.hpp"

namespace hacs {

namespace {

struct Edge {
    int a;
    int b;
};

bool same_edge(Edge x, Edge y) noexcept {
    return (x.a == y.a && x.b == y.b) || (x.a == y.b && x.b == y.a);
}

// Unordered edge multiset equality for three edges.
bool same_edges(const std::array<Edge, 3>& x, const std::array<Edge, 3>& y) noexcept {
    std::array<bool, 3> used{};
    for (const Edge& e : x) {
        bool found = false;
        for (std::size_t k = 0; k < 3; ++k) {
            if (!used[k] && same_edge(e, y[k])) {
                used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Reconnection of the three segments cut at tour positions i < j < k:
// S0 = (k+1 .. i), X = (i+1 .. j), Y = (j+1 .. k). The new tour is
// S0 followed by X and Y (or Y and X), each possibly reversed.
struct Reconnection {
    bool swap = false;
    bool reverse_x = false;
    bool reverse_y = false;
};

constexpr std::array<Reconnection, 7> kReconnections{{
    {false, true, false},
    {false, false, true},
    {false, true, true},
    {true, false, false},
    {true, true, false},
    {true, false, true},
    {true, true, true},
}};

struct Move {
    Weight gain = 0;
    int kind = 0;  // 0: none, 2: 2-opt, 3: 3-opt
    int i = 0, j = 0, k = 0;
    Reconnection reconnection;
};

// Best-improvement 3-opt over local ids 0..m-1 with a dense distance table.
// Candidate moves are generated as sequential exchanges t1..t6 whose partial
// gains stay positive; every improving 2-opt or 3-opt move has such a
// rotation, so the search still covers the full neighborhood. A move of
// gain G also has a rotation whose partial gains reach G/3 and 2G/3, which
// bounds the scan once a move of gain B is known.
class ThreeOptSearch {
public:
    ThreeOptSearch(const GtspInstance& instance, std::span<const NodeId> nodes)
        : m_(static_cast<int>(nodes.size())),
          nodes_(nodes.begin(), nodes.end()),
          dist_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0),
          tour_(static_cast<std::size_t>(m_)),
          pos_(static_cast<std::size_t>(m_)),
          adjacent_(2 * static_cast<std::size_t>(m_)) {
        for (int a = 0; a < m_; ++a) {
            for (int b = 0; b < m_; ++b) {
                if (a != b) at(a, b) = instance.dist(nodes_[static_cast<std::size_t>(a)], nodes_[static_cast<std::size_t>(b)]);
            }
        }
        std::iota(tour_.begin(), tour_.end(), 0);
        index_tour();
        scratch_.reserve(static_cast<std::size_t>(m_));
        neighbors_.reserve(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_ - 1));
        for (int a = 0; a < m_; ++a) {
            const auto first = neighbors_.end() - neighbors_.begin();
            for (int b = 0; b < m_; ++b) {
                if (b != a) neighbors_.push_back(b);
            }
            std::sort(neighbors_.begin() + first, neighbors_.end(), [&](int x, int y) {
                if (at(a, x) != at(a, y)) return at(a, x) < at(a, y);
                return nodes_[static_cast<std::size_t>(x)] < nodes_[static_cast<std::size_t>(y)];
            });
        }
    }

    // Returns the total gain achieved.
    Weight run() {
        Weight total = 0;
        while (true) {
            const Move move = find_best_move();
            if (move.kind == 0) break;
            apply(move);
            total += move.gain;
        }
        return total;
    }

    std::vector<NodeId> nodes() const {
        std::vector<NodeId> out(static_cast<std::size_t>(m_));
        for (int p = 0; p < m_; ++p) out[static_cast<std::size_t>(p)] = nodes_[static_cast<std::size_t>(tour_[static_cast<std::size_t>(p)])];
        return out;
    }

private:
    Weight& at(int a, int b) noexcept {
        return dist_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b)];
    }
    Weight d(int a, int b) const noexcept {
        return dist_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b)];
    }
    int at_pos(int p) const noexcept { return tour_[static_cast<std::size_t>(((p % m_) + m_) % m_)]; }
    int pos(int v) const noexcept { return pos_[static_cast<std::size_t>(v)]; }
    const Weight* row(int a) const noexcept { return dist_.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(m_); }
    // dir 0 is the successor, dir 1 the predecessor.
    int adjacent(int v, int dir) const noexcept { return adjacent_[2 * static_cast<std::size_t>(v) + static_cast<std::size_t>(dir)]; }
    std::span<const int> neighbor_list(int v) const noexcept {
        const auto width = static_cast<std::size_t>(m_ - 1);
        return {neighbors_.data() + static_cast<std::size_t>(v) * width, width};
    }

    void index_tour() {
        for (int p = 0; p < m_; ++p) {
            const auto v = static_cast<std::size_t>(tour_[static_cast<std::size_t>(p)]);
            pos_[v] = p;
            adjacent_[2 * v] = at_pos(p + 1);
            adjacent_[2 * v + 1] = at_pos(p - 1);
        }
    }

    // Tour position p such that the edge joins positions p and p+1.
    int edge_position(Edge e) const noexcept {
        const int pa = pos(e.a);
        return at_pos(pa + 1) == e.b ? pa : pos(e.b);
    }

    bool match_two_opt(Edge r1, Edge r2, Edge n1, Edge n2, Move& move) const {
        int i = edge_position(r1);
        int j = edge_position(r2);
        if (i == j) return false;
        if (i > j) std::swap(i, j);
        const Edge e1{at_pos(i), at_pos(j)};
        const Edge e2{at_pos(i + 1), at_pos(j + 1)};
        const bool ok = (same_edge(n1, e1) && same_edge(n2, e2)) || (same_edge(n1, e2) && same_edge(n2, e1));
        if (!ok) return false;
        move.kind = 2;
        move.i = i;
        move.j = j;
        return true;
    }

    bool match_three_opt(const std::array<Edge, 3>& removed, const std::array<Edge, 3>& added, Move& move) const {
        std::array<int, 3> p{edge_position(removed[0]), edge_position(removed[1]), edge_position(removed[2])};
        std::sort(p.begin(), p.end());
        if (p[0] == p[1] || p[1] == p[2]) return false;
        const int i = p[0], j = p[1], k = p[2];
        const int a = at_pos(i), x_first = at_pos(i + 1), x_last = at_pos(j);
        const int y_first = at_pos(j + 1), y_last = at_pos(k), c_next = at_pos(k + 1);
        for (const Reconnection& r : kReconnections) {
            const int xf = r.reverse_x ? x_last : x_first;
            const int xl = r.reverse_x ? x_first : x_last;
            const int yf = r.reverse_y ? y_last : y_first;
            const int yl = r.reverse_y ? y_first : y_last;
            const std::array<Edge, 3> candidate =
                r.swap ? std::array<Edge, 3>{Edge{a, yf}, Edge{yl, xf}, Edge{xl, c_next}}
                       : std::array<Edge, 3>{Edge{a, xf}, Edge{xl, yf}, Edge{yl, c_next}};
            if (same_edges(candidate, added)) {
                move.kind = 3;
                move.i = i;
                move.j = j;
                move.k = k;
                move.reconnection = r;
                return true;
            }
        }
        return false;
    }

    Move find_best_move() const {
        Move best;
        for (int p1 = 0; p1 < m_; ++p1) {
            const int t1 = tour_[static_cast<std::size_t>(p1)];
            for (int dir1 = 0; dir1 < 2; ++dir1) {
                const int t2 = adjacent(t1, dir1);
                const Weight* row2 = row(t2);
                const Weight d12 = row2[t1];
                for (int t3 : neighbor_list(t2)) {
                    const Weight g1 = d12 - row2[t3];
                    if (g1 <= 0 || 3 * g1 <= best.gain) break;
                    if (t3 == t1) continue;
                    const Weight* row3 = row(t3);
                    for (int dir2 = 0; dir2 < 2; ++dir2) {
                        const int t4 = adjacent(t3, dir2);
                        if (t4 == t2) continue;
                        const Weight* row4 = row(t4);
                        const Weight big_g1 = g1 + row3[t4];
                        if (t4 != t1) {
                            const Weight gain = big_g1 - row4[t1];
                            Move candidate;
                            if (gain > best.gain &&
                                match_two_opt({t1, t2}, {t3, t4}, {t2, t3}, {t4, t1}, candidate)) {
                                candidate.gain = gain;
                                best = candidate;
                            }
                        }
                        for (int t5 : neighbor_list(t4)) {
                            const Weight g2 = big_g1 - row4[t5];
                            if (g2 <= 0 || 3 * g2 <= 2 * best.gain) break;
                            if (t5 == t3) continue;
                            const Weight* row5 = row(t5);
                            for (int dir3 = 0; dir3 < 2; ++dir3) {
                                const int t6 = adjacent(t5, dir3);
                                if (t6 == t1) continue;
                                const Weight gain = g2 + row5[t6] - row(t6)[t1];
                                if (gain <= best.gain) continue;
                                // t5 differs from t3 and t4, so only (t1, t2) can repeat.
                                if (t5 == t1 && t6 == t2) continue;
                                Move candidate;
                                if (match_three_opt({Edge{t1, t2}, Edge{t3, t4}, Edge{t5, t6}},
                                                    {Edge{t2, t3}, Edge{t4, t5}, Edge{t6, t1}}, candidate)) {
                                    candidate.gain = gain;
                                    best = candidate;
                                }
                            }
                        }
                    }
                }
            }
        }
        return best;
    }

    void apply(const Move& move) {
        std::vector<int>& next = scratch_;
        next.clear();
        if (move.kind == 2) {
            for (int p = 0; p <= move.i; ++p) next.push_back(at_pos(p));
            for (int p = move.j; p > move.i; --p) next.push_back(at_pos(p));
            for (int p = move.j + 1; p < m_; ++p) next.push_back(at_pos(p));
        } else {
            const auto append = [&](int from, int to, bool reversed) {
                if (reversed) {
                    for (int p = to; p >= from; --p) next.push_back(at_pos(p));
                } else {
                    for (int p = from; p <= to; ++p) next.push_back(at_pos(p));
                }
            };
            // S0 runs from k+1 around to i.
            for (int p = move.k + 1; p < m_ + move.i + 1; ++p) next.push_back(at_pos(p));
            const Reconnection& r = move.reconnection;
            if (r.swap) {
                append(move.j + 1, move.k, r.reverse_y);
                append(move.i + 1, move.j, r.reverse_x);
            } else {
                append(move.i + 1, move.j, r.reverse_x);
                append(move.j + 1, move.k, r.reverse_y);
            }
        }
        tour_.swap(next);
        index_tour();
    }

    int m_;
    std::vector<NodeId> nodes_;
    std::vector<Weight> dist_;
    std::vector<int> tour_;
    std::vector<int> pos_;
    std::vector<int> adjacent_;
    std::vector<int> neighbors_;  // m rows of m-1 ids, nearest first
    std::vector<int> scratch_;
};

}  // namespace

Tour three_opt(const GtspInstance& instance, const Tour& tour) {
    if (tour.nodes.size() < 4) return tour;
    check_feasible(instance, tour.nodes);
    ThreeOptSearch search(instance, tour.nodes);
    const Weight gain = search.run();
    if (gain == 0) return tour;
    Tour out{search.nodes(), tour.weight - gain};
    return out;
}

}  // namespace hacs
