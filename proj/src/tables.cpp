#include "sca/enumerate.hpp"

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "sca/text.hpp"

namespace sca {

namespace {

OracleClass make_class(std::initializer_list<const char*> rows, const char* turning,
                       const char* crossing, long long displacement, long long period_len) {
    std::string text;
    for (const char* r : rows) {
        text += r;
        text += '\n';
    }
    const PatternParse parsed = parse_pattern(text);
    assert(parsed.ok());
    OracleClass cls;
    cls.period = canonical_rotation(parsed.pattern);
    const auto t = GenericRule::parse(GenericRule::Kind::Turning, turning);
    const auto c = GenericRule::parse(GenericRule::Kind::Crossing, crossing);
    assert(t && c);
    cls.turning = *t;
    cls.crossing = *c;
    cls.speed = Speed{displacement, period_len};
    return cls;
}

}  // namespace

std::vector<OracleClass> reference_table(int strands) {
    if (strands == 1) {
        return {
            make_class({"@0 s-", "@-1 -s"}, "X0X00XXXX", "XXXXXXXXX", 0, 2),
            make_class({"@0 r-"}, "XXXX0XX1X", "XXXXXXXXX", -1, 1),
            make_class({"@0 -s", "@1 r-", "@2 s-"}, "X1X00XX0X", "XXXXXXXXX", -1, 3),
            make_class({"@0 -l"}, "XXXX01XXX", "XXXXXXXXX", 1, 1),
            make_class({"@0 s-", "@-1 -l", "@-2 -s"}, "X0X100XXX", "XXXXXXXXX", 1, 3),
            make_class({"@0 s-", "@-1 -l", "@-2 -s", "@-1 r-"}, "X1X100X0X", "XXXXXXXXX",
                       0, 4),
        };
    }
    if (strands == 2) {
        // 26 shift-classes: 12 stationary, 8 at speed ±1/3, 4 crossing-bearing
        // at speed ±1/5 (one per orientation), and the two speed ±1 drifters.
        // Crossing-bearing classes consult crossing bit 4 only.
        return {
            make_class({"@0 -l -- r-", "@-1 -s -- -- s-", "@0 r- -- -l", "@1 s- -s"},
                       "X1X100X0X", "XXXXXXXXX", 0, 4),
            make_class({"@0 -l -- s-", "@-1 -s -- -l", "@0 r- -s", "@1 s- r-"},
                       "X1X100X0X", "XXXXXXXXX", 0, 4),
            make_class({"@0 -l -- s-", "@-1 -s -- -l", "@0 s- -s"}, "X0X100XXX",
                       "XXXXXXXXX", 1, 3),
            make_class({"@0 -l -l"}, "XXXX01XXX", "XXXXXXXXX", 1, 1),
            make_class({"@0 -l -l", "@-1 -s -s", "@0 r- r-", "@1 s- s-"}, "X1X100X0X",
                       "XXXXXXXXX", 0, 4),
            make_class({"@0 -l -l", "@-1 -s -s", "@0 s- s-"}, "X0X100XXX", "XXXXXXXXX",
                       1, 3),
            make_class({"@0 -l -s", "@-1 -s -- r-", "@0 r- -- s-", "@1 s- -l"},
                       "X1X100X0X", "XXXXXXXXX", 0, 4),
            make_class({"@0 -l -s", "@-1 -s -- s-", "@0 s- -l"}, "X0X100XXX",
                       "XXXXXXXXX", 1, 3),
            make_class({"@0 -l r-", "@-1 -s -- s-", "@0 r- -l", "@1 RL", "@0 -s s-",
                        "@1 ss"},
                       "01X100X01", "XXXX0XXXX", 0, 6),
            make_class({"@0 -l r-", "@-1 -s -- s-", "@0 r- -l", "@1 rl", "@0 -s s-",
                        "@1 ss"},
                       "01X100X01", "XXXX1XXXX", 0, 6),
            make_class({"@0 -l r-", "@-1 -s -- s-", "@0 r- -l", "@1 ss"}, "X1X100X00",
                       "XXXXXXXXX", 0, 4),
            make_class({"@0 -l s-", "@-1 -s -l", "@0 RL", "@-1 -s s-", "@0 ss"},
                       "001100X0X", "XXXX0XXXX", 1, 5),
            make_class({"@0 -l s-", "@-1 -s -l", "@0 rl", "@-1 -s s-", "@0 ss"},
                       "001100X0X", "XXXX1XXXX", 1, 5),
            make_class({"@0 -l s-", "@-1 -s -l", "@0 ss"}, "X00100XXX", "XXXXXXXXX", 1,
                       3),
            make_class({"@0 -s -- r-", "@1 r- -- s-", "@2 s- -s"}, "X1X00XX0X",
                       "XXXXXXXXX", -1, 3),
            make_class({"@0 -s -- s-", "@1 r- -s", "@2 s- r-"}, "X1X00XX0X",
                       "XXXXXXXXX", -1, 3),
            make_class({"@0 -s -- s-", "@1 s- -s"}, "X0X00XXXX", "XXXXXXXXX", 0, 2),
            make_class({"@0 -s -s", "@1 r- r-", "@2 s- s-"}, "X1X00XX0X", "XXXXXXXXX",
                       -1, 3),
            make_class({"@0 -s -s", "@1 s- s-"}, "X0X00XXXX", "XXXXXXXXX", 0, 2),
            make_class({"@0 -s r-", "@1 r- s-", "@2 RL", "@1 -s s-", "@2 ss"},
                       "01X00010X", "XXXX0XXXX", -1, 5),
            make_class({"@0 -s r-", "@1 r- s-", "@2 rl", "@1 -s s-", "@2 ss"},
                       "01X00010X", "XXXX1XXXX", -1, 5),
            make_class({"@0 -s r-", "@1 r- s-", "@2 ss"}, "X1X00X00X", "XXXXXXXXX", -1,
                       3),
            make_class({"@0 -s s-", "@1 RL"}, "1XXX00X0X", "XXXX0XXXX", 0, 2),
            make_class({"@0 -s s-", "@1 rl"}, "1XXX00X0X", "XXXX1XXXX", 0, 2),
            make_class({"@0 -s s-", "@1 ss"}, "00X00XXXX", "XXXXXXXXX", 0, 2),
            make_class({"@0 r- r-"}, "XXXX0XX1X", "XXXXXXXXX", -1, 1),
        };
    }
    throw std::invalid_argument("reference tables cover one and two strands");
}

}  // namespace sca
