#include "bsymbol/enumerator.hpp"

namespace bsymbol {

std::string WeightEnumerator::to_text() const {
    if (counts_.empty()) return "0";
    std::string out;
    for (auto [w, c] : counts_) {
        if (!out.empty()) out += " + ";
        if (w == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += w == 1 ? "T" : "T^" + std::to_string(w);
    }
    return out;
}

}  // namespace bsymbol
