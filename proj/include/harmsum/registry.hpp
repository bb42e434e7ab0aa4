#ifndef HARMSUM_REGISTRY_HPP
#define HARMSUM_REGISTRY_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "harmsum/formula.hpp"

namespace harmsum {

/// Keyed store of verified formulas, (power, order) -> Formula, optionally
/// journaled to an append-only file of formula-json lines. Insertion is
/// serialized and idempotent on equal formulas; a verified-but-different
/// duplicate for a key is an integrity error, never silently replaced.
class FormulaRegistry {
public:
    using Key = std::pair<unsigned, unsigned>;

    explicit FormulaRegistry(unsigned extension_cap = 8) : extension_cap_(extension_cap) {}

    unsigned extension_cap() const { return extension_cap_; }
    void set_extension_cap(unsigned cap) { extension_cap_ = cap; }

    std::optional<Formula> find(unsigned power, unsigned order) const;
    bool contains(unsigned power, unsigned order) const;
    std::size_t size() const;
    std::vector<Formula> entries() const;

    /// Requires f.verified. Appends to the journal when one is attached and
    /// the key is new.
    void insert(const Formula& f);

    /// Attaches a journal file and loads any existing lines. Malformed lines
    /// (e.g. a torn tail after a crash) are skipped; each skip is reported
    /// through `warn`. Returns the number of formulas loaded.
    std::size_t attach_journal(const std::string& path, const std::function<void(const std::string&)>& warn);

    const std::string& journal_path() const { return journal_path_; }

private:
    void append_to_journal(const Formula& f);

    mutable std::mutex mu_;
    std::map<Key, Formula> entries_;
    std::string journal_path_;
    unsigned extension_cap_;
};

} // namespace harmsum

#endif
