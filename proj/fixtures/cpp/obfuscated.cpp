#include <iostream>
#include <IMPORT_0>
#include <string.h>
using namespace std;
int VAR_0,VAR_1;
int data;
int tree[1005];
char str[10][10];
int lowbit(int VAR_2)
{
    return VAR_2&(-VAR_2);
}
void add(int VAR_2,int VAR_3)
{
    while(VAR_2<=VAR_0)
    {
        tree[VAR_2]+=VAR_3;
        VAR_2+=lowbit(VAR_2);
    }
}
int sum(int VAR_2)
{
    int ans=0;
    while(VAR_2>0)
    {
        ans+=tree[VAR_2];
        VAR_2-=lowbit(VAR_2);
    }
    return ans;
}
