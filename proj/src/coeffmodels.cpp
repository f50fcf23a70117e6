#include "polylab/coeffmodels.hpp"

#include <stdexcept>

#include "polylab/rng.hpp"

namespace polylab {

namespace {

uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        uint64_t v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(what);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("model descriptor: bad " + what + " '" + s + "'");
    }
}

}  // namespace

CoefficientModel CoefficientModel::parse(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("model descriptor '" + descriptor +
                                    "' lacks ':', expected kind:value");
    std::string kind = descriptor.substr(0, colon);
    std::string rest = descriptor.substr(colon + 1);
    CoefficientModel m;
    if (kind == "mult") {
        m.kind = ModelKind::multiplicative;
        m.seed = parse_u64(rest, "seed");
    } else if (kind == "sqfree") {
        m.kind = ModelKind::squarefree;
        m.seed = parse_u64(rest, "seed");
    } else if (kind == "iid") {
        m.kind = ModelKind::iid;
        m.seed = parse_u64(rest, "seed");
    } else if (kind == "fekete") {
        m.kind = ModelKind::fekete;
        m.prime = parse_u64(rest, "prime");
        Prime p(m.prime);  // validates primality
        if (m.prime == 2)
            throw std::invalid_argument("fekete model needs an odd prime");
    } else {
        throw std::invalid_argument("unknown model kind '" + kind +
                                    "', expected mult|sqfree|fekete|iid");
    }
    return m;
}

std::string CoefficientModel::descriptor() const {
    switch (kind) {
        case ModelKind::multiplicative: return "mult:" + std::to_string(seed);
        case ModelKind::squarefree: return "sqfree:" + std::to_string(seed);
        case ModelKind::fekete: return "fekete:" + std::to_string(prime);
        case ModelKind::iid: return "iid:" + std::to_string(seed);
    }
    throw std::logic_error("unreachable");
}

int CoefficientModel::prime_sign(uint64_t p) const {
    return (hash2(seed, p) >> 63) ? -1 : 1;
}

std::vector<int> CoefficientModel::draw_sequence(uint64_t n) const {
    if (n < 1) throw std::invalid_argument("draw_sequence: n must be >= 1");
    std::vector<int> out(n);
    switch (kind) {
        case ModelKind::multiplicative:
        case ModelKind::squarefree: {
            bool sqfree = kind == ModelKind::squarefree;
            out[0] = 1;
            for (uint64_t m = 2; m <= n; ++m) {
                int v = 1;
                for (const auto& [p, e] : factorize_small(m)) {
                    if (sqfree && e > 1) {
                        v = 0;
                        break;
                    }
                    if (e % 2 == 1) v *= prime_sign(p);
                }
                out[m - 1] = v;
            }
            break;
        }
        case ModelKind::fekete: {
            if (prime <= n)
                throw std::invalid_argument("fekete model requires prime > sequence length");
            Prime p(prime);
            for (uint64_t a = 1; a <= n; ++a) out[a - 1] = legendre(int64_t(a), p);
            break;
        }
        case ModelKind::iid: {
            for (uint64_t m = 1; m <= n; ++m)
                out[m - 1] = (hash2(seed, m) >> 63) ? -1 : 1;
            break;
        }
    }
    return out;
}

IntPoly build_R(const std::vector<int>& signs) {
    if (signs.empty()) throw std::invalid_argument("build_R: empty sequence");
    std::vector<mpz_class> c(signs.size());
    for (size_t i = 0; i < signs.size(); ++i) c[i] = signs[i];
    return IntPoly(std::move(c));
}

IntPoly build_R(const CoefficientModel& m, int degree) {
    if (degree < 0) throw std::invalid_argument("build_R: degree must be >= 0");
    return build_R(m.draw_sequence(uint64_t(degree) + 1));
}

IntPoly build_fekete(int d, Prime p) {
    if (d < 1) throw std::invalid_argument("build_fekete: d must be >= 1");
    if (p.value == 2 || p.value <= uint64_t(d))
        throw std::invalid_argument("build_fekete: need odd prime p > d");
    std::vector<mpz_class> c(static_cast<size_t>(d));
    for (int a = 1; a <= d; ++a) c[size_t(a) - 1] = legendre(a, p);
    return IntPoly(std::move(c));
}

}  // namespace polylab
