// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#pragma once

#include <stdexcept>
#include <string>

namespace irssec {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Vector/matrix sizes that do not agree.
class DimensionError : public Error
{
public:
    using Error::Error;
};

// Argument outside the mathematical domain of an operation (negative distance, rho > 1, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// ULA routine handed a URA geometry or vice versa.
class GeometryMismatch : public Error
{
public:
    using Error::Error;
};

class DegenerateChannel : public Error
{
public:
    using Error::Error;
};

class ConfigError : public Error
{
public:
    using Error::Error;
};

class EnumerationCapExceeded : public Error
{
public:
    using Error::Error;
};

class SolverFailure : public Error
{
public:
    SolverFailure(const std::string& what, double primal, double dual, double gap)
        : Error(what), primal_residual(primal), dual_residual(dual), duality_gap(gap)
    {
    }

    double primal_residual;
    double dual_residual;
    double duality_gap;
};

} // namespace irssec
