// SPDX-License-Identifier: Apache-2.0

#ifndef UDW_VERSION_HPP
#define UDW_VERSION_HPP

namespace udw {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // UDW_VERSION_HPP
