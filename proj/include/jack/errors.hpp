#pragma once

#include <stdexcept>
#include <string>

namespace jack {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : error { using error::error; };
struct invariant_error : error { using error::error; };
struct domain_error : error { using error::error; };
struct positivity_error : error { using error::error; };
struct truncation_error : error { using error::error; };
struct cap_error : error { using error::error; };
struct search_error : error { using error::error; };
struct precision_error : error { using error::error; };
struct regime_error : error { using error::error; };
struct growth_unavailable : error { using error::error; };
struct internal_error : error { using error::error; };

}  // namespace jack
