#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace freeword {

// Reserved separator symbol spellings. User tables may not use them; the
// augmentation constructions materialize them as ordinary symbols.
inline constexpr const char* kDiamondSymbol = "<>";
inline constexpr const char* kClubSymbol = "<club>";
inline constexpr const char* kSpadeSymbol = "<spade>";
inline constexpr const char* kHeartSymbol = "<heart>";

bool is_reserved_symbol(std::string_view name);

// Alphabet with per-symbol weights. Symbol ids are insertion indices and are
// stable under extension, so a DFA over a base table remains valid when the
// table is extended with separator symbols.
class SymbolTable {
public:
    SymbolTable() = default;

    // Deterministic construction: symbols inserted in name order.
    // Rejects empty names, reserved names, and non-finite weights.
    static SymbolTable from_entries(const std::map<std::string, double>& entries);

    // Appends a symbol (used by the augmentation constructions; bypasses the
    // reserved-name check).
    int add_internal(const std::string& name, double weight);

    int id(std::string_view name) const;  // -1 if absent
    bool contains(std::string_view name) const { return id(name) >= 0; }
    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int id) const { return names_[static_cast<std::size_t>(id)]; }
    double weight(int id) const { return weights_[static_cast<std::size_t>(id)]; }
    const std::vector<std::string>& names() const { return names_; }

    // Symbol ids ordered by name bytes; sampling tables and enumeration use
    // this for reproducibility.
    std::vector<int> ids_by_name() const;

    double min_weight() const;

private:
    std::vector<std::string> names_;
    std::vector<double> weights_;
};

}  // namespace freeword
