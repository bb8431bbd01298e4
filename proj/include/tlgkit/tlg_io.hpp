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
  \file tlg_io.hpp
  \brief Text format for threshold gate networks and key files

  Network files use INPUT(x), KEYINPUT(k), OUTPUT(z) declarations and one
  line per gate:

      sig = TH(a:1, b:2, k0:-2 ; T=3)

  Key files hold a single `key = <bits>` line whose characters follow the
  KEYINPUT declaration order of the network they belong to.
*/

#pragma once

#include "bench_io.hpp" // for the shared lexical helpers
#include "tlg_network.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace tlgkit
{

namespace detail
{

inline int parse_int( const std::string& text, int line )
{
  try
  {
    size_t used = 0;
    const int value = std::stoi( text, &used );
    if ( used != text.size() )
    {
      throw parse_error( "trailing characters in number '" + text + "'", line );
    }
    return value;
  }
  catch ( const parse_error& )
  {
    throw;
  }
  catch ( ... )
  {
    throw parse_error( "expected an integer, got '" + text + "'", line );
  }
}

} // namespace detail

/*! \brief Parses threshold network text into a validated network. */
inline TlgNetwork parse_tlg( std::istream& in, const std::string& top_name = "top" )
{
  TlgNetwork net;
  net.name = top_name;

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
    if ( detail::strip_ws( line.substr( close + 1 ) ).size() )
    {
      throw parse_error( "unexpected text after ')'", lineno );
    }
    const std::string head = detail::strip_ws( line.substr( 0, open ) );
    const std::string args = line.substr( open + 1, close - open - 1 );

    if ( head == "INPUT" )
    {
      const auto sig = detail::strip_ws( args );
      if ( sig.empty() )
      {
        throw parse_error( "INPUT() with empty signal name", lineno );
      }
      net.add_input( sig );
      continue;
    }
    if ( head == "KEYINPUT" )
    {
      const auto sig = detail::strip_ws( args );
      if ( sig.empty() )
      {
        throw parse_error( "KEYINPUT() with empty signal name", lineno );
      }
      net.add_key_input( sig );
      continue;
    }
    if ( head == "OUTPUT" )
    {
      const auto sig = detail::strip_ws( args );
      if ( sig.empty() )
      {
        throw parse_error( "OUTPUT() with empty signal name", lineno );
      }
      net.add_output( sig );
      continue;
    }

    const auto eq = head.find( '=' );
    if ( eq == std::string::npos )
    {
      throw parse_error( "expected '<name> = TH(...)'", lineno );
    }
    const std::string target = detail::strip_ws( head.substr( 0, eq ) );
    const std::string keyword = detail::strip_ws( head.substr( eq + 1 ) );
    if ( keyword != "TH" )
    {
      throw parse_error( "expected TH gate, got '" + keyword + "'", lineno );
    }
    if ( target.empty() )
    {
      throw parse_error( "assignment with empty target name", lineno );
    }

    const auto semi = args.find( ';' );
    if ( semi == std::string::npos )
    {
      throw parse_error( "TH gate needs '; T=<value>'", lineno );
    }
    const std::string input_part = args.substr( 0, semi );
    const std::string thr_part = detail::strip_ws( args.substr( semi + 1 ) );
    if ( thr_part.rfind( "T=", 0 ) != 0 )
    {
      throw parse_error( "threshold clause must look like T=<value>", lineno );
    }

    Tlg gate;
    gate.output = target;
    gate.line = lineno;
    gate.threshold = detail::parse_int( detail::strip_ws( thr_part.substr( 2 ) ), lineno );

    for ( const auto& item : detail::split_args( input_part, lineno ) )
    {
      const auto colon = item.find( ':' );
      if ( colon == std::string::npos )
      {
        throw parse_error( "gate input must look like signal:weight", lineno );
      }
      TlgInput gi;
      gi.signal = detail::strip_ws( item.substr( 0, colon ) );
      gi.weight = detail::parse_int( detail::strip_ws( item.substr( colon + 1 ) ), lineno );
      if ( gi.signal.empty() )
      {
        throw parse_error( "gate input with empty signal name", lineno );
      }
      gate.inputs.push_back( std::move( gi ) );
    }
    net.add_gate( std::move( gate ) );
  }

  // key flags are not part of the text; they follow the declarations
  for ( auto& g : net.gates )
  {
    for ( auto& in : g.inputs )
    {
      in.is_key = net.is_key_input( in.signal );
    }
  }

  net.validate();
  return net;
}

inline TlgNetwork read_tlg( const std::string& path )
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
  return parse_tlg( in, top.empty() ? "top" : top );
}

inline void write_tlg( const TlgNetwork& net, std::ostream& out )
{
  out << "# " << net.name << "\n";
  for ( const auto& in : net.inputs )
  {
    out << "INPUT(" << in << ")\n";
  }
  for ( const auto& k : net.key_inputs )
  {
    out << "KEYINPUT(" << k << ")\n";
  }
  for ( const auto& o : net.outputs )
  {
    out << "OUTPUT(" << o << ")\n";
  }
  for ( const auto& g : net.gates )
  {
    out << g.output << " = TH(";
    for ( size_t i = 0; i < g.inputs.size(); ++i )
    {
      out << ( i ? ", " : "" ) << g.inputs[i].signal << ":" << g.inputs[i].weight;
    }
    out << " ; T=" << g.threshold << ")\n";
  }
}

inline void write_tlg_file( const TlgNetwork& net, const std::string& path )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw parse_error( "cannot write '" + path + "'" );
  }
  write_tlg( net, out );
}

/*! \brief Reads a `key = <bits>` file; characters follow KEYINPUT order. */
inline std::vector<bool> parse_key( std::istream& in )
{
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
    const auto eq = line.find( '=' );
    if ( eq == std::string::npos || detail::strip_ws( line.substr( 0, eq ) ) != "key" )
    {
      throw parse_error( "expected 'key = <bits>'", lineno );
    }
    const std::string bits = detail::strip_ws( line.substr( eq + 1 ) );
    std::vector<bool> key;
    key.reserve( bits.size() );
    for ( char c : bits )
    {
      if ( c != '0' && c != '1' )
      {
        throw parse_error( std::string( "key bit must be 0 or 1, got '" ) + c + "'", lineno );
      }
      key.push_back( c == '1' );
    }
    if ( key.empty() )
    {
      throw parse_error( "empty key", lineno );
    }
    return key;
  }
  throw parse_error( "no 'key = <bits>' line found" );
}

inline std::vector<bool> read_key( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw parse_error( "cannot open '" + path + "'" );
  }
  return parse_key( in );
}

inline void write_key( const std::vector<bool>& key, std::ostream& out )
{
  out << "key = ";
  for ( bool b : key )
  {
    out << ( b ? '1' : '0' );
  }
  out << "\n";
}

inline void write_key_file( const std::vector<bool>& key, const std::string& path )
{
  std::ofstream out( path );
  if ( !out )
  {
    throw parse_error( "cannot write '" + path + "'" );
  }
  write_key( key, out );
}

} // namespace tlgkit
