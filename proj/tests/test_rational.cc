#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cc4/rational.hpp"

using namespace cc4;

TEST_CASE("canonical form") {
  Rat r(6, -4);
  r.canonicalize();
  CHECK(r.get_den() == 2);
  CHECK(r.get_num() == -3);
  CHECK(rat_str(r) == "-3/2");
}

TEST_CASE("parsing") {
  CHECK(rat_parse("3/4") == rat(3, 4));
  CHECK(rat_parse("-7") == rat(-7));
  CHECK(rat_parse("1.25") == rat(5, 4));
  CHECK(rat_parse("-0.5e-3") == rat(-1, 2000));
  CHECK(rat_parse("2e3") == rat(2000));
  CHECK_THROWS(rat_parse(""));
  CHECK_THROWS(rat_parse("abc"));
}

TEST_CASE("powers") {
  CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
  CHECK(rat_pow(rat(-2), 2) == rat(4));
  CHECK(pow2(-3) == rat(1, 8));
  CHECK(pow2(5) == rat(32));
}

TEST_CASE("digest is stable") {
  CHECK(digest_hex("abc") == digest_hex("abc"));
  CHECK(digest_hex("abc") != digest_hex("abd"));
}
