#include "homog/canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homog {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

std::vector<std::vector<int>> profile_preserving_permutations(const Language& lang) {
    const int m = lang.parts();
    std::vector<int> theta(static_cast<std::size_t>(m));
    std::iota(theta.begin(), theta.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = i + 1; j < m && ok; ++j)
                if (lang.colour_count(i, j) != lang.colour_count(theta[i], theta[j])) ok = false;
        if (ok) out.push_back(theta);
    } while (std::next_permutation(theta.begin(), theta.end()));
    return out;
}

namespace {

constexpr long long kNodeBudget = 50'000'000;

class CanonSearch {
public:
    CanonSearch(const Graph& g, int max_colours, bool relabel)
        : g_(g), m_(g.part_count()), relabel_(relabel), max_colours_(max_colours) {}

    void run(const std::vector<int>& theta) {
        std::vector<std::uint8_t> header{static_cast<std::uint8_t>(m_),
                                         static_cast<std::uint8_t>(g_.size())};
        target_.assign(static_cast<std::size_t>(g_.size()), 0);
        groups_.assign(static_cast<std::size_t>(m_), {});
        for (int v = 0; v < g_.size(); ++v) {
            target_[v] = theta[g_.part(v)];
            groups_[target_[v]].push_back(v);
        }
        slot_part_.clear();
        for (int t = 0; t < m_; ++t) {
            header.push_back(static_cast<std::uint8_t>(groups_[t].size()));
            for (std::size_t k = 0; k < groups_[t].size(); ++k) slot_part_.push_back(t);
        }
        bool less = false;
        if (have_best_) {
            auto c = std::lexicographical_compare_three_way(
                header.begin(), header.end(), best_.begin(),
                best_.begin() + static_cast<long>(header.size()));
            if (c > 0) return;
            less = c < 0;
        }
        cur_ = header;
        seq_.clear();
        used_.assign(static_cast<std::size_t>(g_.size()), 0);
        labels_.assign(static_cast<std::size_t>(m_ * (m_ - 1) / 2),
                       std::vector<Colour>(static_cast<std::size_t>(max_colours_), kNoColour));
        next_label_.assign(labels_.size(), 0);
        place(less);
    }

    const std::vector<std::uint8_t>& best() const { return best_; }

private:
    void place(bool less) {
        if (++nodes_ > kNodeBudget)
            throw std::length_error("canonical form search exceeds node budget");
        const std::size_t t = seq_.size();
        if (t == static_cast<std::size_t>(g_.size())) {
            if (!have_best_ || less) {
                best_ = cur_;
                have_best_ = true;
                ++best_version_;
            }
            return;
        }
        const int tp = slot_part_[t];
        for (int v : groups_[tp]) {
            if (used_[v]) continue;
            const std::size_t mark = cur_.size();
            std::vector<std::pair<int, Colour>> assigned;
            for (std::size_t s = 0; s < t; ++s) {
                int u = seq_[s];
                if (target_[u] == tp) continue;
                Colour c = g_.colour(u, v);
                Colour out = c;
                if (relabel_) {
                    int slot = pair_slot(m_, target_[u], tp);
                    if (labels_[slot][c] == kNoColour) {
                        labels_[slot][c] = next_label_[slot]++;
                        assigned.push_back({slot, c});
                    }
                    out = labels_[slot][c];
                }
                cur_.push_back(out);
            }
            bool sub_less = less;
            bool prune = false;
            if (have_best_ && !less) {
                for (std::size_t k = mark; k < cur_.size(); ++k) {
                    if (cur_[k] < best_[k]) {
                        sub_less = true;
                        break;
                    }
                    if (cur_[k] > best_[k]) {
                        prune = true;
                        break;
                    }
                }
            }
            if (!prune) {
                used_[v] = 1;
                seq_.push_back(v);
                const long long version = best_version_;
                place(sub_less);
                if (best_version_ != version) less = false;
                seq_.pop_back();
                used_[v] = 0;
            }
            cur_.resize(mark);
            for (auto [slot, c] : assigned) {
                labels_[slot][c] = kNoColour;
                --next_label_[slot];
            }
        }
    }

    const Graph& g_;
    int m_;
    bool relabel_;
    int max_colours_;
    std::vector<int> target_;
    std::vector<std::vector<int>> groups_;
    std::vector<int> slot_part_;
    std::vector<int> seq_;
    std::vector<char> used_;
    std::vector<std::uint8_t> cur_;
    std::vector<std::uint8_t> best_;
    bool have_best_ = false;
    std::vector<std::vector<Colour>> labels_;
    std::vector<Colour> next_label_;
    long long nodes_ = 0;
    long long best_version_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, const Language& lang, Equivalence eq) {
    if (g.part_count() != lang.parts())
        throw std::invalid_argument("canonical_form: graph and language disagree on parts");
    CanonSearch search(g, lang.max_colours(), eq == Equivalence::colour_isomorphism);
    if (eq == Equivalence::parts_fixed) {
        std::vector<int> id(static_cast<std::size_t>(g.part_count()));
        std::iota(id.begin(), id.end(), 0);
        search.run(id);
    } else {
        for (const auto& theta : profile_preserving_permutations(lang)) search.run(theta);
    }
    return CanonicalForm{search.best()};
}

CanonicalForm canonical_form(const Monic& a, const Language& lang, Equivalence eq) {
    return canonical_form(a.to_graph(), lang, eq);
}

bool is_colour_isomorphism(const ColourIsomorphism& iso, const Language& lang) {
    const int m = lang.parts();
    if (static_cast<int>(iso.theta.size()) != m) return false;
    std::vector<int> sorted = iso.theta;
    std::sort(sorted.begin(), sorted.end());
    for (int p = 0; p < m; ++p)
        if (sorted[p] != p) return false;
    if (static_cast<int>(iso.sigma.size()) != lang.pair_count()) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const auto& s = iso.sigma[lang.pair_index(i, j)];
            int n = lang.colour_count(i, j);
            if (n != lang.colour_count(iso.theta[i], iso.theta[j])) return false;
            if (static_cast<int>(s.size()) != n) return false;
            std::vector<char> hit(static_cast<std::size_t>(n), 0);
            for (Colour c : s) {
                if (c >= n || hit[c]) return false;
                hit[c] = 1;
            }
        }
    return true;
}

ColourIsomorphism identity_isomorphism(const Language& lang) {
    ColourIsomorphism iso;
    iso.theta.resize(static_cast<std::size_t>(lang.parts()));
    std::iota(iso.theta.begin(), iso.theta.end(), 0);
    iso.sigma.resize(static_cast<std::size_t>(lang.pair_count()));
    for (int i = 0; i < lang.parts(); ++i)
        for (int j = i + 1; j < lang.parts(); ++j) {
            auto& s = iso.sigma[lang.pair_index(i, j)];
            s.resize(static_cast<std::size_t>(lang.colour_count(i, j)));
            std::iota(s.begin(), s.end(), Colour{0});
        }
    return iso;
}

ColourIsomorphism random_colour_isomorphism(const Language& lang, std::mt19937_64& rng) {
    auto thetas = profile_preserving_permutations(lang);
    ColourIsomorphism iso = identity_isomorphism(lang);
    iso.theta = thetas[std::uniform_int_distribution<std::size_t>(0, thetas.size() - 1)(rng)];
    for (auto& s : iso.sigma) std::shuffle(s.begin(), s.end(), rng);
    return iso;
}

Monic apply(const ColourIsomorphism& iso, const Monic& a) {
    const int m = a.part_count();
    auto ps = a.parts();
    std::vector<int> target;
    for (int p : ps) target.push_back(iso.theta[p]);
    std::vector<int> sorted = target;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Colour> edges(static_cast<std::size_t>(m * (m - 1) / 2), kNoColour);
    for (std::size_t x = 0; x < ps.size(); ++x)
        for (std::size_t y = x + 1; y < ps.size(); ++y) {
            Colour c = a.colour(ps[x], ps[y]);
            edges[pair_slot(m, target[x], target[y])] = iso.sigma[pair_slot(m, ps[x], ps[y])][c];
        }
    std::vector<Colour> colours;
    for (std::size_t x = 0; x < sorted.size(); ++x)
        for (std::size_t y = x + 1; y < sorted.size(); ++y)
            colours.push_back(edges[pair_slot(m, sorted[x], sorted[y])]);
    return Monic(m, sorted, colours);
}

Graph apply(const ColourIsomorphism& iso, const Graph& g) {
    const int m = g.part_count();
    GraphBuilder b(m);
    for (int v = 0; v < g.size(); ++v) b.add_vertex(iso.theta[g.part(v)]);
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.part(u) != g.part(v))
                b.set_colour(u, v, iso.sigma[pair_slot(m, g.part(u), g.part(v))][g.colour(u, v)]);
    return b.build();
}

Graph permute_vertices(const Graph& g, const std::vector<int>& perm) {
    std::vector<int> inverse(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v) inverse[perm[v]] = static_cast<int>(v);
    return g.induced(inverse);
}

}  // namespace homog
