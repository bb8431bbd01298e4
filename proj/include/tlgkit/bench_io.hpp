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
  \file bench_io.hpp
  \brief Reader and writer for the BENCH netlist format

  Supports INPUT/OUTPUT declarations and AND, OR, NAND, NOR, NOT, XOR,
  XNOR, BUFF, DFF assignments.  Gate keywords are matched case-insensitively.
  Each `q = DFF(d)` is cut on read: `q` joins the primary inputs and `d` the
  primary outputs of the returned combinational circuit.
*/

#pragma once

#include "bool_circuit.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tlgkit
{

namespace detail
{

inline std::string strip_ws( const std::string& s )
{
  size_t b = 0, e = s.size();
  while ( b < e && std::isspace( static_cast<unsigned char>( s[b] ) ) )
  {
    ++b;
  }
  while ( e > b && std::isspace( static_cast<unsigned char>( s[e - 1] ) ) )
  {
    --e;
  }
  return s.substr( b, e - b );
}

inline std::string to_upper( std::string s )
{
  for ( auto& c : s )
  {
    c = static_cast<char>( std::toupper( static_cast<unsigned char>( c ) ) );
  }
  return s;
}

/*! \brief Splits `args` at commas and strips whitespace; empty items error. */
inline std::vector<std::string> split_args( const std::string& args, int line )
{
  std::vector<std::string> items;
  std::string cur;
  std::stringstream ss( args );
  while ( std::getline( ss, cur, ',' ) )
  {
    cur = strip_ws( cur );
    if ( cur.empty() )
    {
      throw parse_error( "empty argument in gate call", line );
    }
    items.push_back( cur );
  }
  if ( items.empty() )
  {
    throw parse_error( "gate call with no arguments", line );
  }
  return items;
}

} // namespace detail

/*! \brief Parses BENCH text into a validated combinational circuit. */
inline BoolCircuit parse_bench( std::istream& in, const std::string& top_name = "top" )
{
  BoolCircuit circ;
  circ.name = top_name;

  std::string raw;
  int lineno = 0;
  while ( std::getline( in, raw ) )
  {
    ++lineno;
    const auto hash = raw.find( '#' );
    std::string line = detail::strip_ws( hash == std::string::npos ? raw : raw.substr( 0, hash ) );
    if ( line.empty() )
    {
      continue;
    }

    const auto open = line.find( '(' );
    const auto close = line.rfind( ')' );
    if ( open == std::string::npos || close == std::string::npos || close < open )
    {
      throw parse_error( "expected '(' ... ')'", lineno );
    }
    const std::string head = detail::strip_ws( line.substr( 0, open ) );
    const std::string args = line.substr( open + 1, close - open - 1 );
    if ( detail::strip_ws( line.substr( close + 1 ) ).size() )
    {
      throw parse_error( "unexpected text after ')'", lineno );
    }

    const std::string head_uc = detail::to_upper( head );
    if ( head_uc == "INPUT" )
    {
      const std::string sig = detail::strip_ws( args );
      if ( sig.empty() )
      {
        throw parse_error( "INPUT() with empty signal name", lineno );
      }
      circ.add_input( sig );
      continue;
    }
    if ( head_uc == "OUTPUT" )
    {
      const std::string sig = detail::strip_ws( args );
      if ( sig.empty() )
      {
        throw parse_error( "OUTPUT() with empty signal name", lineno );
      }
      circ.add_output( sig );
      continue;
    }

    const auto eq = head.find( '=' );
    if ( eq == std::string::npos )
    {
      throw parse_error( "expected '<name> = GATE(...)'", lineno );
    }
    const std::string target = detail::strip_ws( head.substr( 0, eq ) );
    const std::string keyword = detail::to_upper( detail::strip_ws( head.substr( eq + 1 ) ) );
    if ( target.empty() )
    {
      throw parse_error( "assignment with empty target name", lineno );
    }

    auto fanins = detail::split_args( args, lineno );

    if ( keyword == "DFF" )
    {
      if ( fanins.size() != 1 )
      {
        throw parse_error( "DFF takes exactly one input", lineno );
      }
      circ.add_input( target );     // register output becomes a pseudo-PI
      circ.add_output( fanins[0] ); // register data becomes a pseudo-PO
      ++circ.num_dffs_cut;
      continue;
    }

    GateKind kind;
    if ( keyword == "AND" )
    {
      kind = GateKind::And;
    }
    else if ( keyword == "OR" )
    {
      kind = GateKind::Or;
    }
    else if ( keyword == "NAND" )
    {
      kind = GateKind::Nand;
    }
    else if ( keyword == "NOR" )
    {
      kind = GateKind::Nor;
    }
    else if ( keyword == "NOT" || keyword == "INV" )
    {
      kind = GateKind::Not;
    }
    else if ( keyword == "XOR" )
    {
      kind = GateKind::Xor;
    }
    else if ( keyword == "XNOR" )
    {
      kind = GateKind::Xnor;
    }
    else if ( keyword == "BUFF" || keyword == "BUF" )
    {
      kind = GateKind::Buf;
    }
    else
    {
      throw parse_error( "unknown gate type '" + keyword + "'", lineno );
    }

    const int nf = static_cast<int>( fanins.size() );
    if ( nf < gate_min_fanins( kind ) || nf > gate_max_fanins( kind ) )
    {
      throw parse_error( std::string( gate_kind_name( kind ) ) + " with " + std::to_string( nf ) +
                             " inputs",
                         lineno );
    }
    circ.add_gate( target, kind, std::move( fanins ), lineno );
  }

  circ.validate();
  return circ;
}

inline BoolCircuit read_bench( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw parse_error( "cannot open '" + path + "'" );
  }
  std::string top = path;
  if ( const auto slash = top.find_last_of( '/' ); slash != std::string::npos )
  {
    top = top.substr( slash + 1 );
  }
  if ( const auto dot = top.find_last_of( '.' ); dot != std::string::npos )
  {
    top = top.substr( 0, dot );
  }
  return parse_bench( in, top.empty() ? "top" : top );
}

inline void write_bench( const BoolCircuit& circ, std::ostream& out )
{
  out << "# " << circ.name << "\n";
  for ( const auto& in : circ.inputs )
  {
    out << "INPUT(" << in << ")\n";
  }
  for ( const auto& o : circ.outputs )
  {
    out << "OUTPUT(" << o << ")\n";
  }
  for ( const auto& g : circ.gates )
  {
    out << g.output << " = " << gate_kind_name( g.kind ) << "(";
    for ( size_t i = 0; i < g.fanins.size(); ++i )
    {
      out << ( i ? ", " : "" ) << g.fanins[i];
    }
    out << ")\n";
  }
}

inline void write_bench_file( const BoolCircuit& circ, const std::string& path )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw parse_error( "cannot write '" + path + "'" );
  }
  write_bench( circ, out );
}

} // namespace tlgkit
