#include <iostream>
#include <stdio.h>
#include <string.h>
using namespace std;
int n,m;
int data;
int tree[1005];
char str[10][10];
int lowbit(int i)
{
    return i&(-i);
}
void add(int i,int x)
{
    while(i<=n)
    {
        tree[i]+=x;
        i+=lowbit(i);
    }
}
int sum(int i)
{
    int ans=0;
    while(i>0)
    {
        ans+=tree[i];
        i-=lowbit(i);
    }
    return ans;
}
