#ifndef SUPERINT_TESTS_SUPPORT_HPP
#define SUPERINT_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include <superint/grassmann.hpp>
#include <superint/io.hpp>
#include <superint/superdomain.hpp>
#include <superint/supermatrix.hpp>

namespace test
{

using namespace superint;

inline GrassmannElement G(const std::string &text, unsigned n)
{
    return parse_grassmann(text, n);
}

// Row-major (p|q) matrix from element strings over Lambda_n.
inline GrassmannMatrix M(unsigned p, unsigned q, unsigned n, const std::vector<std::string> &entries)
{
    std::vector<GrassmannElement> es;
    for (const auto &e : entries) {
        es.push_back(parse_grassmann(e, n));
    }
    return GrassmannMatrix(p, q, std::move(es), GrassmannElement(n));
}

inline SuperFunction ev(const SuperDomainShape &s, unsigned i)
{
    return SuperFunction::even_coordinate(s, i);
}

inline SuperFunction od(const SuperDomainShape &s, unsigned j)
{
    return SuperFunction::odd_coordinate(s, j);
}

inline SuperFunction cst(const SuperDomainShape &s, long c)
{
    return SuperFunction(s, Rational(c));
}

} // namespace test

#endif
