#include <doctest.h>

#include <stdexcept>

#include "kaprekar/absorbing.hpp"
#include "kaprekar/param_maps.hpp"

using namespace kaprekar;
using namespace kaprekar::absorbing;

namespace {
DigitVector num(std::string_view text, int base = 10) { return parse_number(text, base); }
}

TEST_CASE("image_predicate on the boundary examples") {
    CHECK_FALSE(image_predicate(num("4446")));  // digit sums fit, no anti-image
    CHECK_FALSE(image_predicate(num("9990")));  // would need alpha = 10
    CHECK(image_predicate(num("6174")));
    CHECK(image_predicate(num("0999")));
    CHECK(image_predicate(num("53955")));
    CHECK(image_predicate(num("59994")));
    CHECK_FALSE(image_predicate(num("44946")));  // width-5 form with a < b+1
    CHECK_THROWS_AS(image_predicate(num("495")), std::domain_error);
    CHECK_THROWS_AS(image_predicate(num("12")), std::domain_error);
}

TEST_CASE("width-2 image set is the nine multiples of 9") {
    ImageSet set = enumerate_image_set(2, 10);
    std::vector<std::string> expected = {"09", "18", "27", "36", "45",
                                         "54", "63", "72", "81"};
    REQUIRE(set.members.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(set.members[i].to_string() == expected[i]);
    CHECK(set.to_text() == "09\n18\n27\n36\n45\n54\n63\n72\n81\n");
}

TEST_CASE("width-4 image set membership") {
    ImageSet set = enumerate_image_set(4, 10);
    for (const char* member : {"9261", "8532", "6174", "0999"})
        CHECK(set.contains(num(member)));
    CHECK_FALSE(set.contains(num("4446")));
    CHECK_FALSE(set.contains(num("9990")));
    for (const DigitVector& m : set.members) CHECK(digit_sum(m) % 9 == 0);
}

TEST_CASE("width-3 images have a 9 as their largest digit") {
    ImageSet set = enumerate_image_set(3, 10);
    for (const DigitVector& m : set.members) CHECK(order_desc(m).digit(0) == 9);
}

TEST_CASE("image sets are closed under the step") {
    for (auto [width, base] : {std::pair{2, 10}, {3, 10}, {4, 10}, {2, 100}}) {
        VerificationReport r = check_closure(enumerate_image_set(width, base));
        INFO(r.to_string());
        CHECK(r.ok());
    }
}

TEST_CASE("predicate and enumeration agree exactly") {
    VerificationReport r4 = check_predicate_equivalence(4);
    INFO(r4.to_string());
    CHECK(r4.ok());
    CHECK(r4.cases_checked == 10000);
    CHECK_THROWS_AS(check_predicate_equivalence(3), std::domain_error);
}

TEST_CASE("flipping the width-4 inequality admits non-images such as 4446") {
    ImageSet set = enumerate_image_set(4, 10);
    auto flipped = [](const DigitVector& n) {
        int a = n.digit(0), b = n.digit(1), c = n.digit(2), d = n.digit(3);
        if (a + d == 10 && b + c == 8 && a <= b + 1) return true;  // wrong orientation
        return a + d == 9 && b == 9 && c == 9 && a <= 8;
    };
    std::vector<DigitVector> admitted_but_not_images;
    for_each_number(4, 10, [&](const DigitVector& n) {
        if (flipped(n) && !set.contains(n)) admitted_but_not_images.push_back(n);
    });
    CHECK(!admitted_but_not_images.empty());
    CHECK(std::find(admitted_but_not_images.begin(), admitted_but_not_images.end(),
                    num("4446")) != admitted_but_not_images.end());
}

TEST_CASE("width-4 images carry the digit-sum structure of their source") {
    for (const ParamVector& p : feasible_classes(4, 10)) {
        DigitVector image = class_image(p, 4, 10);
        int a = image.digit(0), b = image.digit(1), c = image.digit(2), d = image.digit(3);
        if (*p.beta > 0) {
            CHECK(a + d == 10);
            CHECK(b + c == 8);
        } else {
            CHECK(a + d == 9);
            CHECK(b == 9);
            CHECK(c == 9);
        }
    }
}

TEST_CASE("every predicate member has a constructible anti-image") {
    for (int width : {4, 5}) {
        for_each_number(width, 10, [&](const DigitVector& n) {
            if (!image_predicate(n)) return;
            int a = n.digit(0), b = n.digit(1);
            bool nines_form = (n.digit(1) == 9 && n.digit(2) == 9 &&
                               (width == 4 || n.digit(3) == 9) &&
                               n.digit(0) + n.digit(width - 1) == 9);
            ParamVector cls = nines_form ? ParamVector(a + 1, 0) : ParamVector(a, b + 1);
            DigitVector witness = representative(cls, width, 10);
            CHECK(kaprekar_step(witness) == n);
        });
    }
}
