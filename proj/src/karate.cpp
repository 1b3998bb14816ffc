#include "snsim/karate.hpp"

namespace snsim {
namespace {

constexpr std::string_view kEdges = R"raw(# Zachary karate club, 34 nodes / 78 edges, 1-based node ids
1 2
1 3
1 4
1 5
1 6
1 7
1 8
1 9
1 11
1 12
1 13
1 14
1 18
1 20
1 22
1 32
2 3
2 4
2 8
2 14
2 18
2 20
2 22
2 31
3 4
3 8
3 9
3 10
3 14
3 28
3 29
3 33
4 8
4 13
4 14
5 7
5 11
6 7
6 11
6 17
7 17
9 31
9 33
9 34
10 34
14 34
15 33
15 34
16 33
16 34
19 33
19 34
20 34
21 33
21 34
23 33
23 34
24 26
24 28
24 30
24 33
24 34
25 26
25 28
25 32
26 32
27 30
27 34
28 34
29 32
29 34
30 33
30 34
31 33
31 34
32 33
32 34
33 34
)raw";

constexpr std::string_view kAttributes = R"raw(node,club
1,0
2,0
3,0
4,0
5,0
6,0
7,0
8,0
9,0
10,1
11,0
12,0
13,0
14,0
15,1
16,1
17,0
18,0
19,1
20,0
21,1
22,0
23,1
24,1
25,1
26,1
27,1
28,1
29,1
30,1
31,1
32,1
33,1
34,1
)raw";

}  // namespace

std::string_view karate_edge_text() { return kEdges; }
std::string_view karate_attribute_text() { return kAttributes; }

LoadedNetwork load_karate() {
  return load_network(kEdges, kAttributes);
}

}  // namespace snsim
