#include "harmsum/registry.hpp"

#include <fstream>

namespace harmsum {

std::optional<Formula> FormulaRegistry::find(unsigned power, unsigned order) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find({power, order});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool FormulaRegistry::contains(unsigned power, unsigned order) const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.count({power, order}) != 0;
}

std::size_t FormulaRegistry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

std::vector<Formula> FormulaRegistry::entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<Formula> out;
    out.reserve(entries_.size());
    for (const auto& [key, f] : entries_) out.push_back(f);
    return out;
}

void FormulaRegistry::insert(const Formula& f) {
    if (!f.verified) throw error("registry discipline: formula for power " + std::to_string(f.power) + ", order " +
                                 std::to_string(f.order) + " has not been verified");
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find({f.power, f.order});
    if (it != entries_.end()) {
        if (it->second != f)
            throw integrity_error("two verified but non-equal formulas for power " + std::to_string(f.power) +
                                  ", order " + std::to_string(f.order));
        return;  // idempotent on equal content
    }
    entries_.emplace(Key{f.power, f.order}, f);
    if (!journal_path_.empty()) append_to_journal(f);
}

std::size_t FormulaRegistry::attach_journal(const std::string& path,
                                            const std::function<void(const std::string&)>& warn) {
    std::lock_guard<std::mutex> lock(mu_);
    journal_path_ = path;
    std::ifstream in(path);
    if (!in.is_open()) return 0;  // fresh journal
    std::size_t loaded = 0, lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            Formula f = parse_formula(line);
            f.verified = true;  // journaled formulas were verified before being written
            auto it = entries_.find({f.power, f.order});
            if (it != entries_.end()) {
                if (it->second != f)
                    throw integrity_error("journal line " + std::to_string(lineno) +
                                          " conflicts with an existing entry for power " + std::to_string(f.power) +
                                          ", order " + std::to_string(f.order));
            } else {
                entries_.emplace(Key{f.power, f.order}, std::move(f));
                ++loaded;
            }
        } catch (const parse_error& e) {
            if (warn)
                warn("skipping corrupted journal line " + std::to_string(lineno) + " in " + path + ": " + e.what());
        }
    }
    return loaded;
}

void FormulaRegistry::append_to_journal(const Formula& f) {
    std::ofstream out(journal_path_, std::ios::app);
    if (!out.is_open()) throw error("cannot open registry journal for append: " + journal_path_);
    out << format_formula(f, FormulaStyle::json) << "\n";
}

} // namespace harmsum
