#include "symfun/errors.hpp"
