#include "factcheck/evidence/url.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {
namespace {

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool IsTrackingParam(std::string_view key) {
  const std::string k = AsciiLower(key);
  return k.rfind("utm_", 0) == 0 || k == "fbclid" || k == "gclid";
}

}  // namespace

std::string HostOf(std::string_view url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) return {};
  std::string_view rest = url.substr(scheme_end + 3);
  rest = rest.substr(0, rest.find_first_of("/?#"));
  if (const auto at = rest.rfind('@'); at != std::string_view::npos) rest = rest.substr(at + 1);
  if (!rest.empty() && rest.front() == '[') {
    const auto close = rest.find(']');
    return AsciiLower(rest.substr(0, close == std::string_view::npos ? rest.size() : close + 1));
  }
  rest = rest.substr(0, rest.find(':'));
  std::string host = AsciiLower(rest);
  while (!host.empty() && host.back() == '.') host.pop_back();
  return host;
}

std::string RegistrableDomain(std::string_view host) {
  static constexpr std::array<std::string_view, 12> kSecondLevel = {
      "co", "com", "org", "net", "ac", "gov", "edu", "gv", "or", "ne", "go", "mil"};
  std::vector<std::string_view> labels;
  std::size_t start = 0;
  while (start <= host.size()) {
    const auto dot = host.find('.', start);
    const auto end = dot == std::string_view::npos ? host.size() : dot;
    labels.push_back(host.substr(start, end - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (labels.size() <= 2) return std::string(host);
  std::size_t keep = 2;
  const auto sld = labels[labels.size() - 2];
  if (labels.back().size() == 2 &&
      std::find(kSecondLevel.begin(), kSecondLevel.end(), sld) != kSecondLevel.end()) {
    keep = 3;
  }
  keep = std::min(keep, labels.size());
  std::string out;
  for (std::size_t i = labels.size() - keep; i < labels.size(); ++i) {
    if (!out.empty()) out += '.';
    out += labels[i];
  }
  return out;
}

std::string NormalizeUrl(std::string_view url) {
  std::string_view rest = url.substr(0, url.find('#'));
  const auto scheme_end = rest.find("://");
  if (scheme_end == std::string_view::npos) return std::string(text::Trim(rest));

  std::string out = AsciiLower(rest.substr(0, scheme_end)) + "://";
  rest = rest.substr(scheme_end + 3);
  const auto authority_end = std::min(rest.find_first_of("/?"), rest.size());
  out += AsciiLower(rest.substr(0, authority_end));
  rest = rest.substr(authority_end);

  const auto q = rest.find('?');
  out += rest.substr(0, q);
  if (q == std::string_view::npos) return out;

  std::string query;
  std::string_view params = rest.substr(q + 1);
  while (!params.empty()) {
    const auto amp = params.find('&');
    const std::string_view param = params.substr(0, amp);
    const std::string_view key = param.substr(0, param.find('='));
    if (!param.empty() && !IsTrackingParam(key)) {
      if (!query.empty()) query += '&';
      query += param;
    }
    if (amp == std::string_view::npos) break;
    params = params.substr(amp + 1);
  }
  if (!query.empty()) out += "?" + query;
  return out;
}

}  // namespace factcheck::evidence
