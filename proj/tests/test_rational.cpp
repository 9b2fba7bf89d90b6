#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "instanton/rational.hpp"

using namespace instanton;

TEST_CASE("BigRational canonical form and arithmetic") {
    const BigRational a(6, 4);  // 3/2
    CHECK(a.to_string() == "3/2");
    CHECK((a + a).to_string() == "3");
    CHECK((a - a).is_zero());
    CHECK((a * BigRational(2)).to_string() == "3");
    CHECK((a / BigRational(3)).to_string() == "1/2");
    CHECK((-a).to_string() == "-3/2");
    CHECK(a.inverse().to_string() == "2/3");
    CHECK(BigRational(-4, 6).to_string() == "-2/3");
    CHECK(BigRational(0).is_zero());
    CHECK(BigRational(1).is_one());
    CHECK(BigRational(7, 7).is_one());
}

TEST_CASE("BigRational ordering, sign, integrality") {
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-5).sign() == -1);
    CHECK(BigRational(0).sign() == 0);
    CHECK(BigRational(9, 3).is_integer());
    CHECK(!BigRational(2, 3).is_integer());
    CHECK(BigRational(-7, 2).abs() == BigRational(7, 2));
}

TEST_CASE("BigRational parsing") {
    CHECK(BigRational::from_string("22/7").to_string() == "22/7");
    CHECK(BigRational::from_string("-0").is_zero());
    CHECK(BigRational::from_string("10/4") == BigRational(5, 2));
    CHECK_THROWS_AS(BigRational::from_string("1/0"), DivisionByZeroError);
    CHECK_THROWS_AS(BigRational::from_string("abc"), ParseError);
    CHECK_THROWS_AS(BigRational::from_string(""), ParseError);
}

TEST_CASE("division by zero is refused, not UB") {
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), DivisionByZeroError);
    CHECK_THROWS_AS(BigRational(0).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(GaussRational(BigRational(1)) / GaussRational(), DivisionByZeroError);
}

TEST_CASE("GaussRational field structure") {
    const GaussRational i = GaussRational::i();
    CHECK((i * i).to_string() == "-1");
    const GaussRational z(BigRational(3), BigRational(-2));  // 3 - 2i
    CHECK(z.conj().to_string() == "3+2*i");
    CHECK(z.norm() == BigRational(13));
    CHECK((z * z.inverse()).is_one());
    CHECK((z + z.conj()).to_string() == "6");
    CHECK((z - z).is_zero());
    CHECK(!z.is_real());
    CHECK((z * z.conj()).is_real());
}

TEST_CASE("GaussRational printing matches the scalar grammar") {
    CHECK(GaussRational(BigRational(0)).to_string() == "0");
    CHECK(GaussRational(BigRational(0), BigRational(1)).to_string() == "i");
    CHECK(GaussRational(BigRational(0), BigRational(-1)).to_string() == "-i");
    CHECK(GaussRational(BigRational(1, 2)).to_string() == "1/2");
    CHECK(GaussRational(BigRational(1), BigRational(1)).to_string() == "1+i");
    CHECK(GaussRational(BigRational(2), BigRational(-3)).to_string() == "2-3*i");
    CHECK(GaussRational(BigRational(0), BigRational(5, 4)).to_string() == "5/4*i");
}

TEST_CASE("scalar literals round-trip through parse_scalar") {
    for (const char* text : {"0", "1", "-1", "i", "-i", "1/2", "-3/7", "1+i", "2-3*i",
                             "5/4*i", "-2/3-1/6*i"}) {
        const GaussRational v = parse_scalar(text);
        CHECK(parse_scalar(v.to_string()) == v);
        CHECK(v.to_string() == text);
    }
}
