#include "aperiodic/geometry/lengths.hpp"

#include "aperiodic/error.hpp"

namespace aperiodic::geometry {

double approxValue(const FieldElement& x)
{
    if (x.isRational())
        return x.rationalValue().get_d();
    return algebra::embed(x, Rational(1, algebra::BigInt(1) << 64)).toDouble();
}

LengthAssignment::LengthAssignment(Alphabet alphabet, std::vector<FieldElement> lengths, std::string label)
    : alphabet_(std::move(alphabet)), lengths_(std::move(lengths)), label_(std::move(label))
{
    if (lengths_.size() != alphabet_.size())
        throw ConstraintError("length table has " + std::to_string(lengths_.size()) + " entries for " +
                              std::to_string(alphabet_.size()) + " letters");
    field_ = algebra::FieldDescriptor::rationals();
    for (const auto& l : lengths_)
        field_ = algebra::commonField(FieldElement(field_, Rational(0)), l);
    for (std::size_t x = 0; x < lengths_.size(); ++x) {
        lengths_[x] = lengths_[x].in(field_);
        if (lengths_[x].sign() <= 0)
            throw ConstraintError(std::string("length of '") + alphabet_.symbol(static_cast<Letter>(x)) +
                                  "' is not positive: " + lengths_[x].toString());
        approx_.push_back(approxValue(lengths_[x]));
    }
}

LengthAssignment LengthAssignment::golden(const Alphabet& alphabet)
{
    std::vector<FieldElement> l(alphabet.size(), FieldElement(algebra::FieldDescriptor::golden(), Rational(1)));
    l[symbolic::kA] = FieldElement::goldenPower(1);
    return LengthAssignment(alphabet, std::move(l), "golden");
}

LengthAssignment LengthAssignment::unit(const Alphabet& alphabet)
{
    std::vector<FieldElement> l(alphabet.size(), FieldElement(1L));
    return LengthAssignment(alphabet, std::move(l), "unit");
}

LengthAssignment LengthAssignment::deformed(const Alphabet& alphabet, const symbolic::Morphism& sigma,
                                            int eigenIndex, const Rational& t)
{
    auto xi = algebra::eigenvectorExact(symbolic::substitutionMatrix(sigma), eigenIndex).components;
    std::vector<FieldElement> l;
    for (const auto& c : xi)
        l.push_back(FieldElement(1L) + c * FieldElement(t));
    return LengthAssignment(alphabet, std::move(l), "deformed(" + std::to_string(eigenIndex) + ")");
}

FieldElement LengthAssignment::lengthOf(const std::vector<algebra::BigInt>& counts) const
{
    FieldElement total(field_, Rational(0));
    for (std::size_t x = 0; x < counts.size() && x < lengths_.size(); ++x)
        if (counts[x] != 0)
            total += lengths_[x] * FieldElement(Rational(counts[x]));
    return total;
}

} // namespace aperiodic::geometry
