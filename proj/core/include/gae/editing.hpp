#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gae/bitstring.hpp"
#include "gae/random.hpp"

namespace gae {

enum class EditKind : std::uint8_t { Insert, Delete };

/// What an editor does once it matches: insert or delete `amount` bits
/// just after the matched substring.
struct EditFunction {
    EditKind kind = EditKind::Delete;
    int amount = 1;

    bool operator==(const EditFunction&) const = default;
};

/// A short pattern that scans chromosomes. When the pattern occurs as a
/// substring, the editor fires with probability `concentration` per
/// encounter and applies its edit function.
struct Editor {
    BitString pattern;
    double concentration = 0.0;
    EditFunction function;

    bool operator==(const Editor&) const = default;
};

/// Ordered list of editors; chromosomes pass through them in order, each
/// editor seeing the result of the previous ones.
struct EditorFamily {
    std::vector<Editor> editors;

    bool empty() const { return editors.empty(); }
    std::size_t size() const { return editors.size(); }

    bool operator==(const EditorFamily&) const = default;
};

/// Audit record for one applied edit.
struct EditEvent {
    int editor_index = 0;     // position of the editor in its family
    std::size_t offset = 0;   // match offset in the transcript
    EditFunction function;
    int generation = 0;       // stamped by the engine
};

/// Leftmost offset at which `pattern` occurs in `s`, or nullopt. A pattern
/// longer than the string never matches.
std::optional<std::size_t> find_match(const BitString& pattern, const BitString& s);

/// Apply one edit to `s` given a match of length `m` at offset `k`.
///
/// With p = k + m (first position after the match):
///  - Delete(d) removes the min(d, n-p) alleles at p.., shifts the rest of
///    the suffix left and fills the vacated tail with random alleles.
///  - Insert(d) inserts min(d, n-p) random alleles at p, shifts the suffix
///    right and truncates to the original length.
/// A match ending at the extreme right (p == n) leaves the string unchanged.
/// Positions before p are never touched and the length is always preserved.
BitString apply_edit(const BitString& s, std::size_t k, std::size_t m,
                     const EditFunction& f, RandomSource& rng);

struct TranscriptionResult {
    BitString transcript;
    std::vector<EditEvent> events;
};

/// Run a genotype through every editor layer in family order. For each
/// editor a uniform draw decides whether it is encountered; an encountered
/// editor edits at most once, at the leftmost match on the current
/// transcript. The genotype itself is never modified.
TranscriptionResult transcribe(const BitString& genotype, const EditorFamily& family,
                               RandomSource& rng);

} // namespace gae
