#pragma once

#include <string>
#include <string_view>

namespace factcheck::evidence {

// Lowercases scheme and host, drops the fragment, and removes tracking query
// parameters (utm_*, fbclid, gclid). Remaining parameters keep their order.
std::string NormalizeUrl(std::string_view url);

// Lowercase host without port or userinfo; empty when url is not absolute.
std::string HostOf(std::string_view url);

// Host reduced to its registrable part: the last two labels, or three when
// the second-level label is a common public suffix ("bbc.co.uk").
std::string RegistrableDomain(std::string_view host);

}  // namespace factcheck::evidence
