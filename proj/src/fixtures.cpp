#include "gbg/json_io.hpp"

#include <map>

namespace gbg {

namespace {

const char* k_s3 = R"fixture(
{
 "vertices": [
  "c",
  "a0",
  "a1",
  "a2"
 ],
 "edges": [
  [
   "c",
   "a0",
   "arm0"
  ],
  [
   "c",
   "a1",
   "arm1"
  ],
  [
   "c",
   "a2",
   "arm2"
  ]
 ],
 "rotation": {
  "c": [
   "arm0",
   "arm1",
   "arm2"
  ],
  "a0": [
   "arm0"
  ],
  "a1": [
   "arm1"
  ],
  "a2": [
   "arm2"
  ]
 },
 "root": "a0"
}
)fixture";

const char* k_s4 = R"fixture(
{
 "vertices": [
  "c",
  "a0",
  "a1",
  "a2",
  "a3"
 ],
 "edges": [
  [
   "c",
   "a0",
   "arm0"
  ],
  [
   "c",
   "a1",
   "arm1"
  ],
  [
   "c",
   "a2",
   "arm2"
  ],
  [
   "c",
   "a3",
   "arm3"
  ]
 ],
 "rotation": {
  "c": [
   "arm0",
   "arm1",
   "arm2",
   "arm3"
  ],
  "a0": [
   "arm0"
  ],
  "a1": [
   "arm1"
  ],
  "a2": [
   "arm2"
  ],
  "a3": [
   "arm3"
  ]
 },
 "root": "a0"
}
)fixture";

const char* k_s5 = R"fixture(
{
 "vertices": [
  "c",
  "a0",
  "a1",
  "a2",
  "a3",
  "a4"
 ],
 "edges": [
  [
   "c",
   "a0",
   "arm0"
  ],
  [
   "c",
   "a1",
   "arm1"
  ],
  [
   "c",
   "a2",
   "arm2"
  ],
  [
   "c",
   "a3",
   "arm3"
  ],
  [
   "c",
   "a4",
   "arm4"
  ]
 ],
 "rotation": {
  "c": [
   "arm0",
   "arm1",
   "arm2",
   "arm3",
   "arm4"
  ],
  "a0": [
   "arm0"
  ],
  "a1": [
   "arm1"
  ],
  "a2": [
   "arm2"
  ],
  "a3": [
   "arm3"
  ],
  "a4": [
   "arm4"
  ]
 },
 "root": "a0"
}
)fixture";

const char* k_c5 = R"fixture(
{
 "vertices": [
  "v0",
  "v1",
  "v2",
  "v3",
  "v4"
 ],
 "edges": [
  [
   "v0",
   "v1",
   "c0"
  ],
  [
   "v1",
   "v2",
   "c1"
  ],
  [
   "v2",
   "v3",
   "c2"
  ],
  [
   "v3",
   "v4",
   "c3"
  ],
  [
   "v4",
   "v0",
   "c4"
  ]
 ],
 "rotation": {
  "v0": [
   "c4",
   "c0"
  ],
  "v1": [
   "c1",
   "c0"
  ],
  "v2": [
   "c2",
   "c1"
  ],
  "v3": [
   "c2",
   "c3"
  ],
  "v4": [
   "c3",
   "c4"
  ]
 },
 "root": "v0"
}
)fixture";

const char* k_theta3 = R"fixture(
{
 "vertices": [
  "star",
  "u",
  "v",
  "A",
  "M",
  "w",
  "B",
  "C"
 ],
 "edges": [
  [
   "star",
   "u",
   "su"
  ],
  [
   "u",
   "v",
   "uv"
  ],
  [
   "v",
   "A",
   "vA"
  ],
  [
   "A",
   "B",
   "e0top"
  ],
  [
   "B",
   "w",
   "Bw"
  ],
  [
   "v",
   "M",
   "vM"
  ],
  [
   "M",
   "w",
   "Mw"
  ],
  [
   "w",
   "C",
   "wC"
  ],
  [
   "C",
   "star",
   "e0"
  ]
 ],
 "rotation": {
  "star": [
   "su",
   "e0"
  ],
  "u": [
   "su",
   "uv"
  ],
  "v": [
   "vM",
   "uv",
   "vA"
  ],
  "A": [
   "e0top",
   "vA"
  ],
  "M": [
   "vM",
   "Mw"
  ],
  "w": [
   "wC",
   "Mw",
   "Bw"
  ],
  "B": [
   "Bw",
   "e0top"
  ],
  "C": [
   "e0",
   "wC"
  ]
 },
 "root": "star",
 "tree": {
  "deleted_edges": [
   "e0",
   "e0top"
  ]
 }
}
)fixture";

const char* k_vartheta3 = R"fixture(
{
 "vertices": [
  "star",
  "z",
  "v",
  "p210",
  "w",
  "p150",
  "p60",
  "p30"
 ],
 "edges": [
  [
   "z",
   "star",
   "arm"
  ],
  [
   "z",
   "v",
   "zv"
  ],
  [
   "v",
   "p210",
   "v210"
  ],
  [
   "p210",
   "p150",
   "dleft"
  ],
  [
   "p150",
   "w",
   "150w"
  ],
  [
   "v",
   "w",
   "vw"
  ],
  [
   "w",
   "p60",
   "w60"
  ],
  [
   "p60",
   "p30",
   "dright"
  ],
  [
   "p30",
   "z",
   "30z"
  ]
 ],
 "rotation": {
  "star": [
   "arm"
  ],
  "z": [
   "zv",
   "30z",
   "arm"
  ],
  "v": [
   "v210",
   "vw",
   "zv"
  ],
  "p210": [
   "v210",
   "dleft"
  ],
  "w": [
   "w60",
   "vw",
   "150w"
  ],
  "p150": [
   "dleft",
   "150w"
  ],
  "p60": [
   "dright",
   "w60"
  ],
  "p30": [
   "30z",
   "dright"
  ]
 },
 "root": "star",
 "tree": {
  "deleted_edges": [
   "dleft",
   "dright"
  ]
 }
}
)fixture";

const char* k_theta4 = R"fixture(
{
 "vertices": [
  "0",
  "1",
  "2",
  "3",
  "4",
  "5",
  "6",
  "7",
  "8",
  "9",
  "10",
  "11",
  "12",
  "13",
  "14"
 ],
 "edges": [
  [
   "0",
   "1",
   "t1"
  ],
  [
   "1",
   "2",
   "t2"
  ],
  [
   "2",
   "3",
   "t3"
  ],
  [
   "3",
   "4",
   "t4"
  ],
  [
   "2",
   "5",
   "t5"
  ],
  [
   "5",
   "6",
   "t6"
  ],
  [
   "2",
   "7",
   "t7"
  ],
  [
   "7",
   "8",
   "t8"
  ],
  [
   "8",
   "9",
   "t9"
  ],
  [
   "9",
   "10",
   "t10"
  ],
  [
   "8",
   "11",
   "t11"
  ],
  [
   "11",
   "12",
   "t12"
  ],
  [
   "8",
   "13",
   "t13"
  ],
  [
   "13",
   "14",
   "t14"
  ],
  [
   "0",
   "14",
   "e0"
  ],
  [
   "6",
   "10",
   "e1"
  ],
  [
   "4",
   "12",
   "e2"
  ]
 ],
 "rotation": {
  "0": [
   "t1",
   "e0"
  ],
  "1": [
   "t1",
   "t2"
  ],
  "2": [
   "t7",
   "t2",
   "t3",
   "t5"
  ],
  "3": [
   "t3",
   "t4"
  ],
  "4": [
   "e2",
   "t4"
  ],
  "5": [
   "t5",
   "t6"
  ],
  "6": [
   "e1",
   "t6"
  ],
  "7": [
   "t7",
   "t8"
  ],
  "8": [
   "t13",
   "t8",
   "t9",
   "t11"
  ],
  "9": [
   "t9",
   "t10"
  ],
  "10": [
   "t10",
   "e1"
  ],
  "11": [
   "t11",
   "t12"
  ],
  "12": [
   "t12",
   "e2"
  ],
  "13": [
   "t14",
   "t13"
  ],
  "14": [
   "e0",
   "t14"
  ]
 },
 "root": "0",
 "tree": {
  "deleted_edges": [
   "e0",
   "e1",
   "e2"
  ]
 }
}
)fixture";

const char* k_k4 = R"fixture(
{
 "vertices": [
  "A",
  "B",
  "C",
  "D",
  "u1",
  "star",
  "u2",
  "p",
  "q",
  "r",
  "s1",
  "s2",
  "t1",
  "t2"
 ],
 "edges": [
  [
   "A",
   "u1",
   "Au1"
  ],
  [
   "u1",
   "star",
   "u1s"
  ],
  [
   "star",
   "u2",
   "e0"
  ],
  [
   "u2",
   "B",
   "u2B"
  ],
  [
   "B",
   "p",
   "Bp"
  ],
  [
   "p",
   "D",
   "pD"
  ],
  [
   "D",
   "q",
   "Dq"
  ],
  [
   "q",
   "A",
   "qA"
  ],
  [
   "D",
   "r",
   "Dr"
  ],
  [
   "r",
   "C",
   "rC"
  ],
  [
   "B",
   "s1",
   "Bs1"
  ],
  [
   "s1",
   "s2",
   "f1"
  ],
  [
   "s2",
   "C",
   "s2C"
  ],
  [
   "C",
   "t1",
   "Ct1"
  ],
  [
   "t1",
   "t2",
   "f2"
  ],
  [
   "t2",
   "A",
   "t2A"
  ]
 ],
 "rotation": {
  "A": [
   "t2A",
   "qA",
   "Au1"
  ],
  "B": [
   "u2B",
   "Bp",
   "Bs1"
  ],
  "C": [
   "s2C",
   "rC",
   "Ct1"
  ],
  "D": [
   "pD",
   "Dq",
   "Dr"
  ],
  "u1": [
   "Au1",
   "u1s"
  ],
  "star": [
   "u1s",
   "e0"
  ],
  "u2": [
   "e0",
   "u2B"
  ],
  "p": [
   "Bp",
   "pD"
  ],
  "q": [
   "qA",
   "Dq"
  ],
  "r": [
   "Dr",
   "rC"
  ],
  "s1": [
   "Bs1",
   "f1"
  ],
  "s2": [
   "f1",
   "s2C"
  ],
  "t1": [
   "f2",
   "Ct1"
  ],
  "t2": [
   "t2A",
   "f2"
  ]
 },
 "root": "star",
 "tree": {
  "deleted_edges": [
   "e0",
   "f1",
   "f2"
  ]
 }
}
)fixture";

const char* k_w4 = R"fixture(
{
 "vertices": [
  "H",
  "R1",
  "R2",
  "R3",
  "R4",
  "a",
  "star",
  "b",
  "c1",
  "c2",
  "d1",
  "d2",
  "f1",
  "f2",
  "h1",
  "h2",
  "h3",
  "h4"
 ],
 "edges": [
  [
   "R1",
   "a",
   "R1a"
  ],
  [
   "a",
   "star",
   "as"
  ],
  [
   "star",
   "b",
   "e0"
  ],
  [
   "b",
   "R2",
   "bR2"
  ],
  [
   "R2",
   "c1",
   "R2c1"
  ],
  [
   "c1",
   "c2",
   "g1"
  ],
  [
   "c2",
   "R3",
   "c2R3"
  ],
  [
   "R3",
   "d1",
   "R3d1"
  ],
  [
   "d1",
   "d2",
   "g2"
  ],
  [
   "d2",
   "R4",
   "d2R4"
  ],
  [
   "R4",
   "f1",
   "R4f1"
  ],
  [
   "f1",
   "f2",
   "g3"
  ],
  [
   "f2",
   "R1",
   "f2R1"
  ],
  [
   "H",
   "h1",
   "Hh1"
  ],
  [
   "h1",
   "R1",
   "h1R1"
  ],
  [
   "H",
   "h2",
   "Hh2"
  ],
  [
   "h2",
   "R2",
   "h2R2"
  ],
  [
   "H",
   "h3",
   "Hh3"
  ],
  [
   "h3",
   "R3",
   "h3R3"
  ],
  [
   "H",
   "h4",
   "Hh4"
  ],
  [
   "h4",
   "R4",
   "h4R4"
  ]
 ],
 "rotation": {
  "H": [
   "Hh2",
   "Hh1",
   "Hh4",
   "Hh3"
  ],
  "R1": [
   "f2R1",
   "h1R1",
   "R1a"
  ],
  "R2": [
   "bR2",
   "h2R2",
   "R2c1"
  ],
  "R3": [
   "c2R3",
   "h3R3",
   "R3d1"
  ],
  "R4": [
   "h4R4",
   "R4f1",
   "d2R4"
  ],
  "a": [
   "R1a",
   "as"
  ],
  "star": [
   "as",
   "e0"
  ],
  "b": [
   "e0",
   "bR2"
  ],
  "c1": [
   "R2c1",
   "g1"
  ],
  "c2": [
   "g1",
   "c2R3"
  ],
  "d1": [
   "g2",
   "R3d1"
  ],
  "d2": [
   "d2R4",
   "g2"
  ],
  "f1": [
   "g3",
   "R4f1"
  ],
  "f2": [
   "f2R1",
   "g3"
  ],
  "h1": [
   "h1R1",
   "Hh1"
  ],
  "h2": [
   "h2R2",
   "Hh2"
  ],
  "h3": [
   "Hh3",
   "h3R3"
  ],
  "h4": [
   "Hh4",
   "h4R4"
  ]
 },
 "root": "star",
 "tree": {
  "deleted_edges": [
   "e0",
   "g1",
   "g2",
   "g3"
  ]
 }
}
)fixture";

const char* k_prism = R"fixture(
{
 "vertices": [
  "A1",
  "B1",
  "C1",
  "A2",
  "B2",
  "C2",
  "a",
  "star",
  "b",
  "m1",
  "m2",
  "m3",
  "m4",
  "m5",
  "x1",
  "x2",
  "y1",
  "y2",
  "z1",
  "z2"
 ],
 "edges": [
  [
   "A1",
   "a",
   "A1a"
  ],
  [
   "a",
   "star",
   "as"
  ],
  [
   "star",
   "b",
   "e0"
  ],
  [
   "b",
   "B1",
   "bB1"
  ],
  [
   "B1",
   "m1",
   "B1m1"
  ],
  [
   "m1",
   "B2",
   "m1B2"
  ],
  [
   "A1",
   "m2",
   "A1m2"
  ],
  [
   "m2",
   "A2",
   "m2A2"
  ],
  [
   "A2",
   "m3",
   "A2m3"
  ],
  [
   "m3",
   "B2",
   "m3B2"
  ],
  [
   "C1",
   "m4",
   "C1m4"
  ],
  [
   "m4",
   "C2",
   "m4C2"
  ],
  [
   "A2",
   "m5",
   "A2m5"
  ],
  [
   "m5",
   "C2",
   "m5C2"
  ],
  [
   "B2",
   "z1",
   "B2z1"
  ],
  [
   "z1",
   "z2",
   "k3"
  ],
  [
   "z2",
   "C2",
   "z2C2"
  ],
  [
   "B1",
   "x1",
   "B1x1"
  ],
  [
   "x1",
   "x2",
   "k1"
  ],
  [
   "x2",
   "C1",
   "x2C1"
  ],
  [
   "C1",
   "y1",
   "C1y1"
  ],
  [
   "y1",
   "y2",
   "k2"
  ],
  [
   "y2",
   "A1",
   "y2A1"
  ]
 ],
 "rotation": {
  "A1": [
   "y2A1",
   "A1m2",
   "A1a"
  ],
  "B1": [
   "bB1",
   "B1m1",
   "B1x1"
  ],
  "C1": [
   "x2C1",
   "C1m4",
   "C1y1"
  ],
  "A2": [
   "m2A2",
   "A2m5",
   "A2m3"
  ],
  "B2": [
   "m1B2",
   "m3B2",
   "B2z1"
  ],
  "C2": [
   "z2C2",
   "m5C2",
   "m4C2"
  ],
  "a": [
   "A1a",
   "as"
  ],
  "star": [
   "as",
   "e0"
  ],
  "b": [
   "e0",
   "bB1"
  ],
  "m1": [
   "B1m1",
   "m1B2"
  ],
  "m2": [
   "A1m2",
   "m2A2"
  ],
  "m3": [
   "A2m3",
   "m3B2"
  ],
  "m4": [
   "m4C2",
   "C1m4"
  ],
  "m5": [
   "A2m5",
   "m5C2"
  ],
  "x1": [
   "B1x1",
   "k1"
  ],
  "x2": [
   "k1",
   "x2C1"
  ],
  "y1": [
   "k2",
   "C1y1"
  ],
  "y2": [
   "y2A1",
   "k2"
  ],
  "z1": [
   "B2z1",
   "k3"
  ],
  "z2": [
   "k3",
   "z2C2"
  ]
 },
 "root": "star",
 "tree": {
  "deleted_edges": [
   "e0",
   "k1",
   "k2",
   "k3"
  ]
 }
}
)fixture";

const std::map<std::string, const char*>& table() {
    static const std::map<std::string, const char*> t = {
        {"s3", k_s3},
        {"s4", k_s4},
        {"s5", k_s5},
        {"c5", k_c5},
        {"theta3", k_theta3},
        {"vartheta3", k_vartheta3},
        {"theta4", k_theta4},
        {"k4", k_k4},
        {"w4", k_w4},
        {"prism", k_prism},
    };
    return t;
}

} // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "s3",
        "s4",
        "s5",
        "c5",
        "theta3",
        "vartheta3",
        "theta4",
        "k4",
        "w4",
        "prism",
    };
    return names;
}

std::string fixture_json(const std::string& name) {
    auto it = table().find(name);
    require(it != table().end(), "unknown fixture: " + name);
    return it->second;
}

} // namespace gbg
