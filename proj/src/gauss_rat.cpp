#include "flagtwist/gauss_rat.hpp"

namespace flagtwist {

mpq_class GaussRat::parse_frac(const std::string& s) {
  if (s.empty()) throw Error("empty fraction string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("bad fraction string: " + s);
  if (q.get_den() == 0) throw Error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string GaussRat::str() const {
  auto rat_str = [](const mpq_class& q) {
    std::string t = q.get_num().get_str();
    if (q.get_den() != 1) t += "/" + q.get_den().get_str();
    return t;
  };
  if (is_zero()) return "0";
  std::string out;
  if (re_ != 0) out = rat_str(re_);
  if (im_ != 0) {
    std::string im;
    if (im_ == 1)
      im = "i";
    else if (im_ == -1)
      im = "-i";
    else
      im = rat_str(im_) + "i";
    if (!out.empty() && im[0] != '-') out += "+";
    out += im;
  }
  return out;
}

}  // namespace flagtwist
