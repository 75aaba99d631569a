#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hyperhs::opq {

enum class EigenType { Space, Time };

// Ordered pattern of space-like (•) and time-like (◦) eigenvalues, listed
// by decreasing eigenvalue.
class Motif {
public:
    // Throws InvalidArgument unless the sequence holds exactly p Space and
    // q Time symbols.
    Motif(std::vector<EigenType> symbols, int p, int q);

    // Accepts "•"/"◦" (UTF-8) and the ASCII aliases '+' / '-'.
    static Motif parse(std::string_view text, int p, int q);
    // σ0 = •…•◦…◦
    static Motif reference(int p, int q);

    const std::vector<EigenType>& symbols() const { return symbols_; }
    int p() const { return p_; }
    int q() const { return q_; }
    int size() const { return p_ + q_; }

    // Pairs (i < j) with a ◦ at i and a • at j.
    int inversions() const { return inversions_; }
    // (-1)^inversions: parity of •◦ <-> ◦• transpositions needed to reach σ0.
    int sign() const { return inversions_ % 2 == 0 ? 1 : -1; }

    std::string to_string() const;
    std::string to_ascii() const;

    bool operator==(const Motif& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<EigenType> symbols_;
    int p_;
    int q_;
    int inversions_;
};

int motif_sign(const Motif& motif);

// All C(p+q, p) motifs, in lexicographic order with • < ◦.
std::vector<Motif> enumerate_motifs(int p, int q);

}  // namespace hyperhs::opq
