#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brauer/scalar.hpp"

using namespace brauer;

TEST_CASE("rational arithmetic is exact and canonical") {
    Scalar a = Scalar::rational(1, 3);
    Scalar b = Scalar::rational(2, 5);
    CHECK((a * b).str() == "2/15");
    CHECK((a + b).str() == "11/15");
    CHECK((a - a).isZero());
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
    CHECK(Scalar::rational(-2, -4) == Scalar::rational(1, 2));
}

TEST_CASE("gaussian arithmetic") {
    Scalar i = Scalar::i();
    CHECK(i * i == Scalar(-1));
    Scalar z(mpq_class(1), mpq_class(2)); // 1 + 2i
    CHECK((z * z.conj()).str() == "5");
    CHECK((Scalar(1) / z).str() == "1/5-2/5i");
    CHECK((z / z).isOne());
    CHECK(z.str() == "1+2i");
    CHECK((-z).str() == "-1-2i");
}

TEST_CASE("parity algebra") {
    CHECK((Odd + Odd) == Even);
    CHECK(koszul(Odd, Odd) == -1);
    CHECK(koszul(Odd, Even) == 1);
    CHECK(koszul(Even, Even) == 1);
}
