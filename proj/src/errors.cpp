#include "twcech/errors.hpp"

#include <sstream>

namespace twcech {

namespace {

std::string describe(const std::vector<int>& simplex, int component,
                     const std::string& value) {
  std::ostringstream os;
  os << "twist is not closed at simplex (";
  for (std::size_t i = 0; i < simplex.size(); ++i)
    os << (i ? "," : "") << simplex[i];
  os << "), component " << component << ": dF = " << value;
  return os.str();
}

}  // namespace

NotClosed::NotClosed(std::vector<int> simplex, int component, std::string value)
    : Error(describe(simplex, component, value)),
      simplex_(std::move(simplex)),
      component_(component),
      value_(std::move(value)) {}

}  // namespace twcech
