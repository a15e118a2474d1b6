#include "freeword/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "freeword/errors.hpp"

namespace freeword {

bool is_reserved_symbol(std::string_view name) {
    return name == kDiamondSymbol || name == kClubSymbol || name == kSpadeSymbol ||
           name == kHeartSymbol;
}

SymbolTable SymbolTable::from_entries(const std::map<std::string, double>& entries) {
    SymbolTable table;
    for (const auto& [name, weight] : entries) {
        if (name.empty()) throw DomainError("symbol names must be nonempty");
        if (is_reserved_symbol(name)) throw ReservedSymbolError(name);
        if (!std::isfinite(weight))
            throw DomainError("weight of symbol '" + name + "' is not finite");
        table.add_internal(name, weight);
    }
    return table;
}

int SymbolTable::add_internal(const std::string& name, double weight) {
    names_.push_back(name);
    weights_.push_back(weight);
    return static_cast<int>(names_.size()) - 1;
}

int SymbolTable::id(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::vector<int> SymbolTable::ids_by_name() const {
    std::vector<int> ids(names_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [this](int a, int b) {
        return names_[static_cast<std::size_t>(a)] < names_[static_cast<std::size_t>(b)];
    });
    return ids;
}

double SymbolTable::min_weight() const {
    double m = std::numeric_limits<double>::infinity();
    for (double w : weights_) m = std::min(m, w);
    return m;
}

}  // namespace freeword
