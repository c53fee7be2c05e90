// pistar - exact computation in finite partition semigroups
//
// The outcome of a verification: pass/fail plus human-readable witnesses.

#ifndef PISTAR_VERDICT_HPP_
#define PISTAR_VERDICT_HPP_

#include <string>  // for string
#include <vector>  // for vector

namespace pistar {

  struct Verdict {
    bool                     ok = true;
    std::vector<std::string> witnesses;

    //! Records a witness line without changing the outcome.
    void note(std::string s) {
      witnesses.push_back(std::move(s));
    }

    void fail(std::string s) {
      ok = false;
      witnesses.push_back("FAIL: " + std::move(s));
    }

    //! Fails with `s` when `cond` is false; returns cond.
    bool expect(bool cond, std::string const& s) {
      if (!cond) {
        fail(s);
      }
      return cond;
    }

    void merge(Verdict const& other) {
      ok = ok && other.ok;
      witnesses.insert(
          witnesses.end(), other.witnesses.begin(), other.witnesses.end());
    }
  };

}  // namespace pistar

#endif  // PISTAR_VERDICT_HPP_
