#pragma once

#include <string>

namespace fixtures {

inline const std::string kBoundary4Simplex = "{(1:1:1:2)}";
inline const std::string kTwistedBundle9 = "{(1:1:2:5),(1:1:5:2),(1:2:1:5)}";
inline const std::string kProductBundle10 = "{(1:1:2:6),(1:1:6:2),(1:2:1:6)}";
inline const std::string kTorus15 = "{(1:2:4:8),(1:2:8:4),(1:4:2:8),(1:4:8:2),(1:8:2:4),(1:8:4:2)}";
inline const std::string kDoubleHandle12 = "{(1:2:3:6),(1:2:4:5),(1:5:1:5),(2:2:2:6),(2:3:3:4)}";

inline const std::string kLens0 = "{(1:1:1:11),(1:2:4:7),(1:4:2:7),(1:4:7:2),(2:4:4:4),(2:5:2:5)}";
inline const std::string kLens1 =
    "{(1:1:1:15),(1:2:4:11),(1:4:2:11),(1:4:11:2),(2:4:8:4),(2:5:2:9),(2:7:2:7),(4:4:4:6)}";
inline const std::string kLens2 =
    "{(1:1:1:19),(1:2:4:15),(1:4:2:15),(1:4:15:2),(2:4:12:4),(2:5:2:13),(2:7:2:11),(2:9:2:9),(4:4:4:10),(4:6:4:8)}";

}  // namespace fixtures
