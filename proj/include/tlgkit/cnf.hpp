/* tlgkit: C++ threshold logic synthesis and locking toolkit
 * Copyright (C) 2025-2026  the tlgkit authors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file cnf.hpp
  \brief Clause database with named variables and DIMACS output

  Literals follow the DIMACS convention: a positive integer is the
  variable itself, its negation the complement, and variables are
  numbered from 1.  Named circuit signals map to variables through the
  formula's variable map.
*/

#pragma once

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tlgkit
{

struct CnfFormula
{
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  std::unordered_map<std::string, int> varmap;

  /*! \brief Allocates a fresh unnamed variable. */
  int new_var() { return ++num_vars; }

  /*! \brief Returns the variable for a signal, allocating on first use. */
  int var( const std::string& signal )
  {
    const auto it = varmap.find( signal );
    if ( it != varmap.end() )
    {
      return it->second;
    }
    const int v = new_var();
    varmap.emplace( signal, v );
    return v;
  }

  /*! \brief Looks a signal up without allocating. */
  int var_of( const std::string& signal ) const
  {
    const auto it = varmap.find( signal );
    if ( it == varmap.end() )
    {
      throw std::out_of_range( "no variable for signal '" + signal + "'" );
    }
    return it->second;
  }

  void add_clause( std::vector<int> lits )
  {
    if ( lits.empty() )
    {
      throw std::invalid_argument( "empty clause" );
    }
    for ( const int l : lits )
    {
      if ( l == 0 || std::abs( l ) > num_vars )
      {
        throw std::out_of_range( "literal " + std::to_string( l ) +
                                 " outside the allocated variables" );
      }
    }
    clauses.push_back( std::move( lits ) );
  }

  size_t num_clauses() const { return clauses.size(); }
};

/*! \brief Writes a formula in DIMACS CNF format. */
inline void write_dimacs( const CnfFormula& f, std::ostream& out )
{
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for ( const auto& clause : f.clauses )
  {
    for ( const int l : clause )
    {
      out << l << ' ';
    }
    out << "0\n";
  }
}

} // namespace tlgkit
