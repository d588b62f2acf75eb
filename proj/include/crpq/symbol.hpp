#ifndef CRPQ_SYMBOL_HPP
#define CRPQ_SYMBOL_HPP

#include <cassert>
#include <cstddef>
#include <functional>
#include <string>

namespace crpq {

enum class Orientation { Forward, Reversed };
enum class SymbolKind { Data, Loop };

// An edge label. Data symbols come from the input alphabet and may be
// reversed (the hatted copy living in the symmetric closure). Loop symbols
// are synthetic self-loop markers tied to a query variable; they are always
// Forward and never appear in parsed text.
struct Symbol {
    std::string label;
    Orientation orientation = Orientation::Forward;
    SymbolKind kind = SymbolKind::Data;

    static Symbol data(std::string l, Orientation o = Orientation::Forward) {
        return Symbol{std::move(l), o, SymbolKind::Data};
    }
    static Symbol loop(std::string var) {
        return Symbol{std::move(var), Orientation::Forward, SymbolKind::Loop};
    }

    bool isLoop() const { return kind == SymbolKind::Loop; }

    // Flip orientation; only meaningful for Data symbols.
    Symbol hat() const {
        assert(kind == SymbolKind::Data);
        Symbol s = *this;
        s.orientation = orientation == Orientation::Forward ? Orientation::Reversed
                                                            : Orientation::Forward;
        return s;
    }

    bool operator==(const Symbol& o) const {
        return label == o.label && orientation == o.orientation && kind == o.kind;
    }
    bool operator!=(const Symbol& o) const { return !(*this == o); }
    bool operator<(const Symbol& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (label != o.label) return label < o.label;
        return orientation < o.orientation;
    }
};

// Rendering used by both the regex pretty-printer and graph serialization:
//   single-char data label  -> a      multi-char data label -> <ab>
//   reversed                -> ~a     loop on X             -> <__loop_X>
inline std::string render_symbol(const Symbol& s) {
    if (s.kind == SymbolKind::Loop) return "<__loop_" + s.label + ">";
    std::string core = s.label.size() == 1 ? s.label : "<" + s.label + ">";
    return s.orientation == Orientation::Reversed ? "~" + core : core;
}

struct SymbolHash {
    std::size_t operator()(const Symbol& s) const {
        std::size_t h = std::hash<std::string>{}(s.label);
        h ^= (static_cast<std::size_t>(s.orientation) * 0x9e3779b97f4a7c15ULL) +
             (static_cast<std::size_t>(s.kind) * 0xc2b2ae3d27d4eb4fULL) + (h << 6) + (h >> 2);
        return h;
    }
};

} // namespace crpq

#endif
