#include "hyperhs/opq/motif.hpp"

#include "hyperhs/error.hpp"

#include <algorithm>

namespace hyperhs::opq {

namespace {

constexpr std::string_view kSpaceGlyph = "•";  // •
constexpr std::string_view kTimeGlyph = "◦";   // ◦

}  // namespace

Motif::Motif(std::vector<EigenType> symbols, int p, int q) : symbols_(std::move(symbols)), p_(p), q_(q) {
    const auto spaces = std::count(symbols_.begin(), symbols_.end(), EigenType::Space);
    const auto times = static_cast<long>(symbols_.size()) - spaces;
    if (p < 0 || q < 0 || spaces != p || times != q)
        throw InvalidArgument("motif must contain exactly " + std::to_string(p) + " space-like and " +
                              std::to_string(q) + " time-like symbols");
    inversions_ = 0;
    int times_seen = 0;
    for (EigenType t : symbols_) {
        if (t == EigenType::Time)
            ++times_seen;
        else
            inversions_ += times_seen;
    }
}

Motif Motif::parse(std::string_view text, int p, int q) {
    std::vector<EigenType> symbols;
    while (!text.empty()) {
        if (text.starts_with(kSpaceGlyph)) {
            symbols.push_back(EigenType::Space);
            text.remove_prefix(kSpaceGlyph.size());
        } else if (text.starts_with(kTimeGlyph)) {
            symbols.push_back(EigenType::Time);
            text.remove_prefix(kTimeGlyph.size());
        } else if (text.front() == '+') {
            symbols.push_back(EigenType::Space);
            text.remove_prefix(1);
        } else if (text.front() == '-') {
            symbols.push_back(EigenType::Time);
            text.remove_prefix(1);
        } else {
            throw InvalidArgument("motif: unrecognised symbol");
        }
    }
    return Motif(std::move(symbols), p, q);
}

Motif Motif::reference(int p, int q) {
    std::vector<EigenType> symbols(static_cast<std::size_t>(p), EigenType::Space);
    symbols.insert(symbols.end(), static_cast<std::size_t>(q), EigenType::Time);
    return Motif(std::move(symbols), p, q);
}

std::string Motif::to_string() const {
    std::string out;
    for (EigenType t : symbols_) out += t == EigenType::Space ? kSpaceGlyph : kTimeGlyph;
    return out;
}

std::string Motif::to_ascii() const {
    std::string out;
    for (EigenType t : symbols_) out += t == EigenType::Space ? '+' : '-';
    return out;
}

int motif_sign(const Motif& motif) { return motif.sign(); }

std::vector<Motif> enumerate_motifs(int p, int q) {
    if (p < 0 || q < 0) throw InvalidArgument("enumerate_motifs: negative count");
    // Space < Time in the enum, so next_permutation walks the sorted sequence
    // •…•◦…◦ through every arrangement exactly once.
    std::vector<EigenType> symbols = Motif::reference(p, q).symbols();
    std::vector<Motif> out;
    do {
        out.emplace_back(symbols, p, q);
    } while (std::next_permutation(symbols.begin(), symbols.end()));
    return out;
}

}  // namespace hyperhs::opq
