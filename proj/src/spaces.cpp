#include "fewdist/spaces.hpp"

namespace fewdist {

Space Space::hamming(int n) {
    if (n < 1) throw std::invalid_argument("Hamming space needs n >= 1");
    return Space{SpaceKind::hamming, n, 0};
}

Space Space::johnson(int n, int w) {
    if (n < 1 || w < 1) throw std::invalid_argument("Johnson space needs n, w >= 1");
    if (2 * w > n) throw std::invalid_argument("Johnson space requires 2w <= n");
    return Space{SpaceKind::johnson, n, w};
}

Space Space::sphere(int n) {
    if (n < 2) throw std::invalid_argument("sphere needs ambient dimension n >= 2");
    return Space{SpaceKind::sphere, n, 0};
}

Int Space::multiplicity(int k) const {
    if (k < 0) throw std::domain_error("multiplicity: negative degree");
    switch (kind) {
        case SpaceKind::hamming:
            // binary Hamming eigenspace dimension; the q^{-n} normalization
            // seen in some statements would make these non-integers
            return binomial(Int(n), static_cast<unsigned long>(k));
        case SpaceKind::johnson:
            if (k > w) throw std::domain_error("Johnson multiplicity needs k <= w");
            return binomial(Int(n), k) - (k >= 1 ? binomial(Int(n), k - 1) : Int(0));
        case SpaceKind::sphere:
            if (k == 0) return 1;
            return binomial(Int(n + k - 1), k) -
                   (k >= 2 ? binomial(Int(n + k - 3), k - 2) : Int(0));
    }
    throw std::logic_error("unreachable");
}

std::string Space::str() const {
    switch (kind) {
        case SpaceKind::hamming: return "hamming:" + std::to_string(n);
        case SpaceKind::johnson: return "johnson:" + std::to_string(n) + "," + std::to_string(w);
        case SpaceKind::sphere: return "sphere:" + std::to_string(n);
    }
    throw std::logic_error("unreachable");
}

std::optional<Space> Space::parse(std::string_view text) {
    size_t colon = text.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    std::string head(text.substr(0, colon));
    std::string args(text.substr(colon + 1));
    auto parse_int = [](const std::string& s) -> std::optional<int> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        try {
            return std::stoi(s);
        } catch (...) {
            return std::nullopt;
        }
    };
    try {
        if (head == "hamming") {
            auto n = parse_int(args);
            if (!n) return std::nullopt;
            return hamming(*n);
        }
        if (head == "sphere") {
            auto n = parse_int(args);
            if (!n) return std::nullopt;
            return sphere(*n);
        }
        if (head == "johnson") {
            size_t comma = args.find(',');
            if (comma == std::string::npos) return std::nullopt;
            auto n = parse_int(args.substr(0, comma));
            auto w = parse_int(args.substr(comma + 1));
            if (!n || !w) return std::nullopt;
            return johnson(*n, *w);
        }
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace fewdist
