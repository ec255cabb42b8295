#include "factcheck/text/utf8.hpp"

namespace factcheck::text {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool InRange(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

}  // namespace

std::u32string Decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    int extra = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      extra = 1;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      extra = 2;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      extra = 3;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

void AppendUtf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

std::string Encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t c : cps) AppendUtf8(out, c);
  return out;
}

std::size_t Length(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' || c == 0x85 ||
         c == 0xA0 || c == 0x1680 || InRange(c, 0x2000, 0x200A) || c == 0x2028 || c == 0x2029 ||
         c == 0x202F || c == 0x205F || c == 0x3000;
}

bool IsDigit(char32_t c) {
  return InRange(c, '0', '9') || InRange(c, 0x0660, 0x0669) || InRange(c, 0x06F0, 0x06F9) ||
         InRange(c, 0x0966, 0x096F) || InRange(c, 0x09E6, 0x09EF) || InRange(c, 0xFF10, 0xFF19);
}

bool IsUpper(char32_t c) {
  if (InRange(c, 'A', 'Z')) return true;
  if (InRange(c, 0xC0, 0xDE)) return c != 0xD7;
  // Latin Extended-A alternates upper/lower with a few odd-aligned blocks.
  if (InRange(c, 0x0100, 0x0137)) return c % 2 == 0;
  if (InRange(c, 0x0139, 0x0148)) return c % 2 == 1;
  if (InRange(c, 0x014A, 0x0177)) return c % 2 == 0;
  if (c == 0x0178) return true;
  if (InRange(c, 0x0179, 0x017E)) return c % 2 == 1;
  if (c == 0x0386 || InRange(c, 0x0388, 0x038F)) return c != 0x038B && c != 0x038D;
  if (InRange(c, 0x0391, 0x03AB)) return c != 0x03A2;
  if (InRange(c, 0x0400, 0x042F)) return true;
  if (InRange(c, 0x0460, 0x0481) || InRange(c, 0x048A, 0x04BF)) return c % 2 == 0;
  if (InRange(c, 0x0531, 0x0556)) return true;
  if (InRange(c, 0x10A0, 0x10C5)) return true;
  if (InRange(c, 0x1E00, 0x1EFF)) return c % 2 == 0;
  if (InRange(c, 0xFF21, 0xFF3A)) return true;
  return false;
}

char32_t ToLower(char32_t c) {
  if (InRange(c, 'A', 'Z')) return c + 32;
  if (InRange(c, 0xC0, 0xDE) && c != 0xD7) return c + 32;
  if (IsUpper(c)) {
    if (InRange(c, 0x0100, 0x017E) || InRange(c, 0x0460, 0x04BF) || InRange(c, 0x1E00, 0x1EFF)) {
      return c == 0x0178 ? 0xFF : c + 1;
    }
    if (c == 0x0386) return 0x03AC;
    if (InRange(c, 0x0388, 0x038A)) return c + 37;
    if (c == 0x038C) return 0x03CC;
    if (c == 0x038E || c == 0x038F) return c + 63;
    if (InRange(c, 0x0391, 0x03AB)) return c + 32;
    if (InRange(c, 0x0400, 0x040F)) return c + 80;
    if (InRange(c, 0x0410, 0x042F)) return c + 32;
    if (InRange(c, 0x0531, 0x0556)) return c + 48;
    if (InRange(c, 0x10A0, 0x10C5)) return c + 0x1C60;
    if (InRange(c, 0xFF21, 0xFF3A)) return c + 32;
  }
  return c;
}

bool IsLetter(char32_t c) {
  if (InRange(c, 'a', 'z') || InRange(c, 'A', 'Z')) return true;
  if (c < 0xC0) return c == 0xAA || c == 0xB5 || c == 0xBA;
  if (c == 0xD7 || c == 0xF7) return false;
  if (InRange(c, 0xC0, 0x024F)) return true;
  if (InRange(c, 0x0370, 0x03FF) && c != 0x037E && c != 0x0387) return true;
  if (InRange(c, 0x0400, 0x052F)) return true;
  if (InRange(c, 0x0531, 0x058F)) return true;
  if (InRange(c, 0x05D0, 0x05EA)) return true;
  if (InRange(c, 0x0620, 0x064A)) return true;
  if (InRange(c, 0x0900, 0x0963) || InRange(c, 0x0970, 0x097F)) return true;
  if (InRange(c, 0x0E00, 0x0E7F)) return true;
  if (InRange(c, 0x10A0, 0x10FF)) return true;
  if (InRange(c, 0x1E00, 0x1FFF)) return true;
  if (InRange(c, 0x3040, 0x30FF)) return true;
  if (InRange(c, 0x3400, 0x9FFF)) return true;
  if (InRange(c, 0xAC00, 0xD7AF)) return true;
  if (InRange(c, 0xFF21, 0xFF3A) || InRange(c, 0xFF41, 0xFF5A)) return true;
  return false;
}

bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
  }
  return c == 0xA1 || c == 0xA7 || c == 0xAB || c == 0xB6 || c == 0xB7 || c == 0xBB || c == 0xBF ||
         c == 0x037E || c == 0x0387 || c == 0x055D || c == 0x0589 || c == 0x060C || c == 0x061F ||
         c == 0x06D4 || c == 0x0964 || c == 0x0965 || InRange(c, 0x2010, 0x2027) ||
         InRange(c, 0x2030, 0x205E) || InRange(c, 0x3001, 0x3003) || InRange(c, 0x3008, 0x3011) ||
         InRange(c, 0x3014, 0x301F) || InRange(c, 0xFF01, 0xFF0F) || InRange(c, 0xFF1A, 0xFF20) ||
         InRange(c, 0xFF3B, 0xFF40) || InRange(c, 0xFF5B, 0xFF65);
}

std::string ToLower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (char32_t c : Decode(utf8)) AppendUtf8(out, ToLower(c));
  return out;
}

std::string_view Trim(std::string_view s) {
  const std::u32string cps = Decode(s);
  std::size_t lead = 0;
  while (lead < cps.size() && IsSpace(cps[lead])) ++lead;
  std::size_t trail = cps.size();
  while (trail > lead && IsSpace(cps[trail - 1])) --trail;
  // Map code point positions back to byte offsets.
  std::size_t byte = 0, cp = 0, begin = 0, end = s.size();
  if (lead == cps.size()) return s.substr(s.size());
  while (byte < s.size()) {
    if ((static_cast<unsigned char>(s[byte]) & 0xC0) != 0x80) {
      if (cp == lead) begin = byte;
      if (cp == trail) {
        end = byte;
        break;
      }
      ++cp;
    }
    ++byte;
  }
  return s.substr(begin, end - begin);
}

std::string CollapseWhitespace(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char32_t c : Decode(s)) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    AppendUtf8(out, c);
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char32_t c : Decode(s)) {
    if (IsSpace(c)) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      AppendUtf8(current, c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::string NormalizeToken(std::string_view token) {
  std::u32string cps = Decode(token);
  std::size_t b = 0, e = cps.size();
  while (b < e && IsPunct(cps[b])) ++b;
  while (e > b && IsPunct(cps[e - 1])) --e;
  std::string out;
  for (std::size_t i = b; i < e; ++i) AppendUtf8(out, ToLower(cps[i]));
  return out;
}

std::vector<std::string> NormalizedTokens(std::string_view s) {
  std::vector<std::string> out;
  for (const auto& tok : SplitWhitespace(s)) {
    std::string norm = NormalizeToken(tok);
    if (!norm.empty()) out.push_back(std::move(norm));
  }
  return out;
}

std::string TruncateAtWord(std::string_view s, std::size_t max_chars) {
  const std::u32string cps = Decode(s);
  if (cps.size() <= max_chars) return std::string(s);
  std::size_t cut = max_chars;
  // Cutting exactly before a space is already a word boundary.
  if (!IsSpace(cps[cut])) {
    std::size_t back = cut;
    while (back > 0 && !IsSpace(cps[back - 1])) --back;
    if (back > 0) cut = back;
  }
  while (cut > 0 && IsSpace(cps[cut - 1])) --cut;
  return Encode(std::u32string_view(cps).substr(0, cut));
}

}  // namespace factcheck::text
