#include "gobs/order.hpp"

#include <sstream>

namespace gobs {

TermOrder TermOrder::weighted(std::vector<long> w) {
    for (long x : w)
        if (x <= 0) throw std::invalid_argument("weights must be positive");
    return {OrderKind::Weighted, std::move(w), nullptr};
}

TermOrder TermOrder::block_t(const TermOrder& base) {
    return {OrderKind::BlockT, {}, std::make_shared<TermOrder>(base)};
}

namespace {

std::strong_ordering lex_compare(std::span<const int> a, std::span<const int> b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomial length mismatch");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (kind) {
        case OrderKind::Lex:
            return lex_compare(ea, eb);
        case OrderKind::GrLex: {
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            return lex_compare(ea, eb);
        }
        case OrderKind::GrevLex: {
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            // smaller is the one whose last nonzero difference is positive
            for (int i = a.nvars() - 1; i >= 0; --i)
                if (ea[i] != eb[i]) return eb[i] <=> ea[i];
            return std::strong_ordering::equal;
        }
        case OrderKind::Weighted: {
            long wa = a.weighted_degree(weights);
            long wb = b.weighted_degree(weights);
            if (wa != wb) return wa <=> wb;
            return lex_compare(ea, eb);
        }
        case OrderKind::BlockT: {
            int n = a.nvars() - 1;
            Monomial xa(std::vector<int>(ea.begin(), ea.begin() + n));
            Monomial xb(std::vector<int>(eb.begin(), eb.begin() + n));
            auto c = inner->compare(xa, xb);
            if (c != std::strong_ordering::equal) return c;
            return ea[n] <=> eb[n];
        }
    }
    throw std::logic_error("unknown order kind");
}

std::string TermOrder::str() const {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrLex: return "grlex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::Weighted: {
            std::ostringstream os;
            os << "weight(";
            for (size_t i = 0; i < weights.size(); ++i)
                os << (i ? "," : "") << weights[i];
            os << ")";
            return os.str();
        }
        case OrderKind::BlockT: return "block_t(" + inner->str() + ")";
    }
    return "?";
}

bool TermOrder::operator==(const TermOrder& o) const {
    if (kind != o.kind || weights != o.weights) return false;
    if (kind == OrderKind::BlockT) return *inner == *o.inner;
    return true;
}

}  // namespace gobs
