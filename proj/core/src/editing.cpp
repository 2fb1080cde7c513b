#include "gae/editing.hpp"

#include <algorithm>

namespace gae {

std::optional<std::size_t> find_match(const BitString& pattern, const BitString& s) {
    const auto p = pattern.bits();
    const auto t = s.bits();
    if (p.empty() || p.size() > t.size()) return std::nullopt;
    const auto it = std::search(t.begin(), t.end(), p.begin(), p.end());
    if (it == t.end()) return std::nullopt;
    return static_cast<std::size_t>(it - t.begin());
}

BitString apply_edit(const BitString& s, std::size_t k, std::size_t m,
                     const EditFunction& f, RandomSource& rng) {
    const std::size_t n = s.size();
    const std::size_t p = k + m; // first position after the match
    if (p >= n) return s;        // match ends at the extreme right

    const std::size_t d = std::min<std::size_t>(static_cast<std::size_t>(f.amount), n - p);
    std::vector<std::uint8_t> out(s.bits().begin(), s.bits().end());

    if (f.kind == EditKind::Delete) {
        // drop out[p, p+d), shift the suffix left, random-fill the tail
        std::copy(out.begin() + static_cast<std::ptrdiff_t>(p + d), out.end(),
                  out.begin() + static_cast<std::ptrdiff_t>(p));
        for (std::size_t i = n - d; i < n; ++i) out[i] = rng.next_allele();
    } else {
        // shift out[p, n-d) right by d, then random-fill the gap at p
        std::copy_backward(out.begin() + static_cast<std::ptrdiff_t>(p),
                           out.begin() + static_cast<std::ptrdiff_t>(n - d), out.end());
        for (std::size_t i = p; i < p + d; ++i) out[i] = rng.next_allele();
    }
    return BitString(std::move(out));
}

TranscriptionResult transcribe(const BitString& genotype, const EditorFamily& family,
                               RandomSource& rng) {
    TranscriptionResult out{genotype, {}};
    for (std::size_t j = 0; j < family.editors.size(); ++j) {
        const Editor& editor = family.editors[j];
        if (rng.next_double() >= editor.concentration) continue; // not encountered
        const auto k = find_match(editor.pattern, out.transcript);
        if (!k) continue;
        out.transcript =
            apply_edit(out.transcript, *k, editor.pattern.size(), editor.function, rng);
        out.events.push_back(EditEvent{static_cast<int>(j), *k, editor.function, 0});
    }
    return out;
}

} // namespace gae
