#include "logloc/logmonoid.hpp"

#include "logloc/errors.hpp"

#include <numeric>
#include <string>

namespace logloc::logmonoid {

namespace {

Rational reduce_mod_one(Rational q)
{
    Integer num = numerator_of(q);
    Integer den = denominator_of(q);
    Integer r = num % den;
    if (r < 0) r += den;
    return Rational(r, den);
}

constexpr std::uint64_t kEnhancementBound = 10'000'000;

}  // namespace

UnitRoot::UnitRoot(const Rational& q) : q_(reduce_mod_one(q)) {}

UnitRoot UnitRoot::inverse() const { return UnitRoot(-q_); }

UnitRoot UnitRoot::pow(std::int64_t n) const { return UnitRoot(q_ * n); }

UnitRoot operator*(const UnitRoot& a, const UnitRoot& b) { return UnitRoot(a.q_ + b.q_); }

CharHom::CharHom(std::size_t target_rank, std::size_t source_rank)
    : target_(target_rank), source_(source_rank), entries_(target_rank, std::vector<std::uint64_t>(source_rank, 0))
{
}

CharHom::CharHom(NatMatrix entries, std::size_t source_rank)
    : target_(entries.size()), source_(entries.empty() ? source_rank : entries.front().size()), entries_(std::move(entries))
{
    for (const auto& row : entries_)
        if (row.size() != source_) throw StructuralError("CharHom: ragged matrix");
}

CharHom CharHom::identity(std::size_t rank)
{
    CharHom id(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) id.at(i, i) = 1;
    return id;
}

CharHom operator*(const CharHom& a, const CharHom& b)
{
    if (a.source_ != b.target_) throw StructuralError("CharHom: incompatible ranks in composition");
    CharHom out(a.target_, b.source_);
    for (std::size_t i = 0; i < a.target_; ++i)
        for (std::size_t k = 0; k < a.source_; ++k) {
            if (a.entries_[i][k] == 0) continue;
            for (std::size_t j = 0; j < b.source_; ++j) out.entries_[i][j] += a.entries_[i][k] * b.entries_[k][j];
        }
    return out;
}

ContactMatrix::ContactMatrix(std::vector<std::vector<std::uint64_t>> blocks, std::vector<std::uint64_t> twists)
    : blocks_(std::move(blocks)), twists_(std::move(twists))
{
    if (blocks_.size() != twists_.size())
        throw StructuralError("ContactMatrix: " + std::to_string(blocks_.size()) + " blocks but " +
                              std::to_string(twists_.size()) + " twists");
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (twists_[i] == 0) throw StructuralError("ContactMatrix: twist must be positive");
        for (std::uint64_t c : blocks_[i]) {
            if (c == 0) throw StructuralError("ContactMatrix: contact orders must be positive");
            if (twists_[i] % c != 0)
                throw StructuralError("ContactMatrix: contact " + std::to_string(c) + " does not divide twist " +
                                      std::to_string(twists_[i]));
        }
    }
}

std::size_t ContactMatrix::source_rank() const
{
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
}

CharHom ContactMatrix::characteristic() const
{
    CharHom out(target_rank(), source_rank());
    std::size_t col = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::uint64_t c : blocks_[i]) out.at(i, col++) = c;
    return out;
}

LogHom::LogHom(ContactMatrix contacts, std::vector<UnitRoot> units) : contacts_(std::move(contacts)), units_(std::move(units))
{
    if (units_.size() != contacts_.source_rank()) throw StructuralError("LogHom: one unit per source generator required");
    std::size_t pos = 0;
    for (std::size_t i = 0; i < contacts_.target_rank(); ++i)
        for (std::size_t j = 0; j < contacts_.blocks()[i].size(); ++j, ++pos) {
            Rational scaled = units_[pos].phase() * contacts_.satellite(i, j);
            if (denominator_of(scaled) != 1)
                throw DomainError("LogHom: unit " + to_string(units_[pos].phase()) + " is not a root of order dividing " +
                                  std::to_string(contacts_.satellite(i, j)));
        }
}

bool is_minimal(const ContactMatrix& cm)
{
    for (std::size_t i = 0; i < cm.target_rank(); ++i) {
        const auto& block = cm.blocks()[i];
        if (block.empty()) {
            if (cm.twists()[i] != 1) return false;
            continue;
        }
        std::uint64_t g = 0;
        for (std::uint64_t c : block) g = std::gcd(g, c);
        if (g != 1) return false;
    }
    return true;
}

MadeDiagonal factor_made_diagonal(const ContactMatrix& cm)
{
    const std::size_t m = cm.target_rank();
    const std::size_t n = cm.source_rank();
    CharHom diag(n, n);
    CharHom proj(m, n);
    std::size_t col = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint64_t c : cm.blocks()[i]) {
            diag.at(col, col) = c;
            proj.at(i, col) = 1;
            ++col;
        }
    return {std::move(diag), std::move(proj)};
}

std::uint64_t log_automorphism_order(const std::vector<std::uint64_t>& contact_orders, std::uint64_t d)
{
    if (contact_orders.empty()) {
        if (d == 0) throw DomainError("log_automorphism_order: twist must be positive");
        return d;
    }
    std::uint64_t g = 0;
    for (std::uint64_t c : contact_orders) {
        if (c == 0) throw DomainError("log_automorphism_order: contact orders must be positive");
        g = std::gcd(g, c);
    }
    return g;
}

std::uint64_t lcm_of(const std::vector<std::uint64_t>& values)
{
    std::uint64_t l = 1;
    for (std::uint64_t v : values) {
        if (v == 0) throw DomainError("lcm of a zero entry");
        l = std::lcm(l, v);
    }
    return l;
}

Integer count_enhancements(const std::vector<std::uint64_t>& alpha)
{
    if (alpha.empty()) throw DomainError("count_enhancements: empty contact profile");
    Integer prod = 1;
    for (std::uint64_t a : alpha) {
        if (a == 0) throw DomainError("count_enhancements: contact orders must be positive");
        prod *= a;
    }
    Integer l = lcm_of(alpha);
    if (prod % l != 0) throw std::logic_error("count_enhancements: non-integral unit count");
    return prod / l;
}

std::vector<std::vector<UnitRoot>> enumerate_enhancements(const std::vector<std::uint64_t>& alpha)
{
    if (alpha.empty()) throw DomainError("enumerate_enhancements: empty contact profile");
    std::uint64_t total = 1;
    for (std::uint64_t a : alpha) {
        if (a == 0) throw DomainError("enumerate_enhancements: contact orders must be positive");
        if (total > kEnhancementBound / a) throw ResourceError("enumerate_enhancements: too many unit tuples");
        total *= a;
    }
    const std::uint64_t d = lcm_of(alpha);
    const std::size_t k = alpha.size();

    // Tuple j encodes u_i = exp(2 pi i j_i / alpha_i); mixed-radix index order equals
    // lexicographic order of the q-vectors.
    std::vector<char> seen(total, 0);
    std::vector<std::uint64_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * alpha[i];

    std::vector<std::vector<UnitRoot>> reps;
    std::vector<std::uint64_t> j(k);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (seen[idx]) continue;
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < k; ++i) {
            j[i] = rest / stride[i];
            rest %= stride[i];
        }
        std::vector<UnitRoot> rep;
        rep.reserve(k);
        for (std::size_t i = 0; i < k; ++i) rep.emplace_back(Rational(j[i], alpha[i]));
        reps.push_back(std::move(rep));
        // zeta in mu_d acts on the i-th unit through mu_d -> mu_{alpha_i}.
        for (std::uint64_t s = 0; s < d; ++s) {
            std::uint64_t image = 0;
            for (std::size_t i = 0; i < k; ++i) image += ((j[i] + s) % alpha[i]) * stride[i];
            seen[image] = 1;
        }
    }
    return reps;
}

}  // namespace logloc::logmonoid
